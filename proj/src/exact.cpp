#include "dicut/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace dicut {

namespace {

using Clock = std::chrono::steady_clock;

void check_budget(const SearchBudget& budget) {
    if (budget.max_nodes == 0 || !(budget.wall_time_s > 0)) {
        throw std::invalid_argument("search budget must be positive");
    }
}

// Set of candidate code words for one vertex, over values 0..2^k-1.
struct Domain {
    std::vector<std::uint64_t> words;
    std::uint32_t alive = 0;

    void init_full(std::uint32_t value_count) {
        words.assign((value_count + 63) / 64, ~0ull);
        std::uint32_t rem = value_count & 63u;
        if (rem != 0) {
            words.back() = (1ull << rem) - 1;
        }
        alive = value_count;
    }

    bool has(std::uint32_t v) const { return (words[v >> 6] >> (v & 63u)) & 1u; }

    void remove(std::uint32_t v) {
        std::uint64_t bit = 1ull << (v & 63u);
        std::uint64_t& w = words[v >> 6];
        if (w & bit) {
            w &= ~bit;
            --alive;
        }
    }
};

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<int> winner{std::numeric_limits<int>::max()};
};

enum class Outcome { found, none, timeout, aborted };

class CodeSearch {
public:
    CodeSearch(const Digraph& d, int k, const SearchBudget& budget, bool symmetry_breaking)
        : d_(d), k_(k), budget_(budget) {
        if (k < 0) {
            throw std::invalid_argument("cut count must be nonnegative");
        }
        if (k > 20) {
            throw std::invalid_argument("exhaustive search supports at most 20 cuts");
        }
        value_count_ = 1u << k;
        full_mask_ = value_count_ - 1;

        order_ = d.vertices();
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return d.underlying_degree(a) > d.underlying_degree(b);
        });

        const int nb = d.id_bound();
        nbrs_.assign(static_cast<std::size_t>(nb), {});
        for (int v : order_) {
            for (int w : d.underlying_neighbors(v)) {
                nbrs_[v].push_back({w, d.has_edge(v, w), d.has_edge(w, v)});
            }
        }

        domain_.assign(static_cast<std::size_t>(nb), Domain{});
        assigned_.assign(static_cast<std::size_t>(nb), 0);
        code_.assign(static_cast<std::size_t>(nb), 0);
        for (int v : order_) {
            Domain& dom = domain_[v];
            dom.init_full(value_count_);
            if (d.out_degree(v) > 0) {
                dom.remove(0);
            }
            if (d.in_degree(v) > 0) {
                dom.remove(full_mask_);
            }
        }
        if (symmetry_breaking && !order_.empty()) {
            Domain& first = domain_[order_.front()];
            Domain canonical;
            canonical.init_full(value_count_);
            for (std::uint32_t v = 0; v < value_count_; ++v) {
                // One representative per cardinality: a prefix of {1..k}.
                bool rep = (v & (v + 1)) == 0;
                if (!rep || !first.has(v)) {
                    canonical.remove(v);
                }
            }
            first = std::move(canonical);
        }
    }

    void attach_shared(Shared* shared, int branch) {
        shared_ = shared;
        branch_ = branch;
    }

    /// Restricts the first vertex's domain to exactly one value.
    void pin_first(std::uint32_t value) {
        Domain& first = domain_[order_.front()];
        Domain pinned;
        pinned.init_full(value_count_);
        for (std::uint32_t v = 0; v < value_count_; ++v) {
            if (v != value) {
                pinned.remove(v);
            }
        }
        first = std::move(pinned);
    }

    Domain first_domain() const { return order_.empty() ? Domain{} : domain_[order_.front()]; }

    std::uint64_t nodes() const { return nodes_; }

    Outcome run() {
        // A deadline decades away cannot overflow the clock; skip it instead.
        has_deadline_ = budget_.wall_time_s < 1e9;
        if (has_deadline_) {
            deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(budget_.wall_time_s));
        }
        for (int v : order_) {
            if (domain_[v].alive == 0) {
                return Outcome::none;
            }
        }
        return dfs(0);
    }

    std::vector<CodeWord> witness() const {
        std::vector<CodeWord> w(static_cast<std::size_t>(d_.id_bound()), CodeWord{k_, 0});
        for (int v : d_.vertices()) {
            w[v] = CodeWord{k_, code_[v]};
        }
        return w;
    }

private:
    struct Nbr {
        int vertex;
        bool out;  // edge v -> vertex
        bool in;   // edge vertex -> v
    };

    // Charges one node against the budget; true means stop before exploring it.
    bool over_budget() {
        if (shared_ != nullptr) {
            std::uint64_t prior = shared_->nodes.fetch_add(1, std::memory_order_relaxed);
            if (prior >= budget_.max_nodes) {
                shared_->nodes.fetch_sub(1, std::memory_order_relaxed);
                return true;
            }
        } else if (nodes_ >= budget_.max_nodes) {
            return true;
        }
        ++nodes_;
        if ((nodes_ & 1023u) == 0) {
            if (has_deadline_ && Clock::now() > deadline_) {
                return true;
            }
            if (shared_ != nullptr &&
                shared_->winner.load(std::memory_order_relaxed) < branch_) {
                aborted_ = true;
                return true;
            }
        }
        return false;
    }

    // Filters the domains of v's unassigned neighbors against code word c;
    // returns false on a wipeout. Touched domains are saved for undo.
    bool propagate(int v, std::uint32_t c, std::vector<std::pair<int, Domain>>& saved) {
        for (const Nbr& nb : nbrs_[v]) {
            int w = nb.vertex;
            if (assigned_[w]) {
                continue;
            }
            Domain& dom = domain_[w];
            saved.emplace_back(w, dom);
            if (nb.out) {
                // Edge v->w: values cw with c \ cw empty, i.e. supersets of c.
                std::uint32_t rest = full_mask_ & ~c;
                std::uint32_t s = rest;
                while (true) {
                    dom.remove(c | s);
                    if (s == 0) {
                        break;
                    }
                    s = (s - 1) & rest;
                }
            }
            if (nb.in) {
                // Edge w->v: values cw with cw \ c empty, i.e. subsets of c.
                std::uint32_t s = c;
                while (true) {
                    dom.remove(s);
                    if (s == 0) {
                        break;
                    }
                    s = (s - 1) & c;
                }
            }
            if (dom.alive == 0) {
                return false;
            }
        }
        return true;
    }

    Outcome dfs(std::size_t depth) {
        if (depth == order_.size()) {
            return Outcome::found;
        }
        int v = order_[depth];
        const Domain& dom = domain_[v];
        std::vector<std::pair<int, Domain>> saved;
        for (std::uint32_t c = 0; c < value_count_; ++c) {
            if (!dom.has(c)) {
                continue;
            }
            if (over_budget()) {
                return aborted_ ? Outcome::aborted : Outcome::timeout;
            }
            assigned_[v] = 1;
            code_[v] = c;
            saved.clear();
            if (propagate(v, c, saved)) {
                Outcome sub = dfs(depth + 1);
                if (sub != Outcome::none) {
                    return sub;
                }
            }
            for (auto& [w, old] : saved) {
                domain_[w] = std::move(old);
            }
            assigned_[v] = 0;
        }
        return Outcome::none;
    }

    const Digraph& d_;
    int k_;
    SearchBudget budget_;
    std::uint32_t value_count_ = 1;
    std::uint32_t full_mask_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<Nbr>> nbrs_;
    std::vector<Domain> domain_;
    std::vector<char> assigned_;
    std::vector<std::uint32_t> code_;
    std::uint64_t nodes_ = 0;
    Clock::time_point deadline_;
    bool has_deadline_ = false;
    Shared* shared_ = nullptr;
    int branch_ = 0;
    bool aborted_ = false;
};

SearchResult run_parallel(const Digraph& d, int k, const SearchBudget& budget,
                          bool symmetry_breaking, int threads) {
    CodeSearch probe(d, k, budget, symmetry_breaking);
    Domain first = probe.first_domain();
    std::vector<std::uint32_t> branch_values;
    for (std::uint32_t c = 0; c < (1u << k); ++c) {
        if (first.has(c)) {
            branch_values.push_back(c);
        }
    }
    if (branch_values.size() <= 1) {
        threads = 1;
    }
    if (threads <= 1) {
        Outcome fin = probe.run();
        SearchResult r;
        r.nodes_explored = probe.nodes();
        switch (fin) {
            case Outcome::found:
                r.status = SearchStatus::found;
                r.witness = probe.witness();
                break;
            case Outcome::none:
                r.status = SearchStatus::none;
                break;
            default:
                r.status = SearchStatus::timeout;
                break;
        }
        return r;
    }

    Shared shared;
    const int branch_count = static_cast<int>(branch_values.size());
    std::vector<Outcome> outcomes(static_cast<std::size_t>(branch_count), Outcome::none);
    std::vector<std::vector<CodeWord>> witnesses(static_cast<std::size_t>(branch_count));
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (true) {
            int b = next.fetch_add(1);
            if (b >= branch_count) {
                return;
            }
            try {
                CodeSearch search(d, k, budget, symmetry_breaking);
                search.attach_shared(&shared, b);
                search.pin_first(branch_values[static_cast<std::size_t>(b)]);
                Outcome fin = search.run();
                outcomes[static_cast<std::size_t>(b)] = fin;
                if (fin == Outcome::found) {
                    witnesses[static_cast<std::size_t>(b)] = search.witness();
                    int expected = shared.winner.load();
                    while (b < expected && !shared.winner.compare_exchange_weak(expected, b)) {
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
    };

    std::vector<std::thread> pool;
    int worker_count = std::min(threads, branch_count);
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int i = 0; i < worker_count; ++i) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }

    SearchResult r;
    r.nodes_explored = shared.nodes.load();
    for (int b = 0; b < branch_count; ++b) {
        Outcome fin = outcomes[static_cast<std::size_t>(b)];
        if (fin == Outcome::found) {
            r.status = SearchStatus::found;
            r.witness = std::move(witnesses[static_cast<std::size_t>(b)]);
            return r;
        }
        if (fin == Outcome::timeout || fin == Outcome::aborted) {
            r.status = SearchStatus::timeout;
            return r;
        }
    }
    r.status = SearchStatus::none;
    return r;
}

}  // namespace

SearchResult exists_cover(const Digraph& d, int k, const SearchBudget& budget,
                          const SearchOptions& options) {
    check_budget(budget);
    if (options.threads < 1) {
        throw std::invalid_argument("thread count must be positive");
    }
    return run_parallel(d, k, budget, options.symmetry_breaking, options.threads);
}

MinCoverResult min_cover_number(const Digraph& d, int k_max, const SearchBudget& budget,
                                const SearchOptions& options) {
    check_budget(budget);
    if (k_max < 0) {
        throw std::invalid_argument("k_max must be nonnegative");
    }
    MinCoverResult result;
    auto start = Clock::now();
    for (int k = 0; k <= k_max; ++k) {
        double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        double remaining = budget.wall_time_s - elapsed;
        if (remaining <= 0 || result.nodes_explored >= budget.max_nodes) {
            result.status = SearchStatus::timeout;
            return result;
        }
        SearchBudget sub{budget.max_nodes - result.nodes_explored, remaining};
        SearchResult r = exists_cover(d, k, sub, options);
        result.nodes_explored += r.nodes_explored;
        if (r.status == SearchStatus::found) {
            result.status = SearchStatus::found;
            result.min_cuts = k;
            result.witness = std::move(r.witness);
            return result;
        }
        if (r.status == SearchStatus::timeout) {
            result.status = SearchStatus::timeout;
            return result;
        }
        result.proven_infeasible_up_to = k;
    }
    result.status = SearchStatus::none;
    return result;
}

std::string export_cnf(const Digraph& d, int k) {
    if (k < 1) {
        throw std::invalid_argument("CNF export requires k >= 1");
    }
    if (d.edge_count() < 1) {
        throw std::invalid_argument("CNF export requires at least one edge");
    }
    const long long n = d.id_bound();
    const long long m = d.edge_count();
    const long long vars = static_cast<long long>(k) * (n + m);
    const long long clauses = m * (2 * k + 1);

    std::string out;
    out += "c k-cut cover encoding for a digraph with n=" + std::to_string(n) +
           " m=" + std::to_string(m) + " k=" + std::to_string(k) + "\n";
    out += "c vertex var: v in A_i      <-> v*k + i          (v = 0..n-1, i = 1..k)\n";
    out += "c edge var:   cut i covers edge e  <-> n*k + e*k + i  (e = 0..m-1)\n";
    std::vector<Edge> edges = d.edges();
    for (long long e = 0; e < m; ++e) {
        out += "c edge " + std::to_string(e) + ": " + std::to_string(edges[e].first) + " -> " +
               std::to_string(edges[e].second) + "\n";
    }
    out += "p cnf " + std::to_string(vars) + " " + std::to_string(clauses) + "\n";
    for (long long e = 0; e < m; ++e) {
        const auto& [u, v] = edges[e];
        std::string disjunction;
        for (int i = 1; i <= k; ++i) {
            long long z = n * k + e * k + i;
            long long xu = static_cast<long long>(u) * k + i;
            long long xv = static_cast<long long>(v) * k + i;
            out += "-" + std::to_string(z) + " " + std::to_string(xu) + " 0\n";
            out += "-" + std::to_string(z) + " -" + std::to_string(xv) + " 0\n";
            disjunction += std::to_string(z) + " ";
        }
        out += disjunction + "0\n";
    }
    return out;
}

}  // namespace dicut

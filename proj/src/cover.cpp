#include "dicut/cover.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dicut {

VerifyResult verify_cover(const Digraph& d, const CutCover& cover) {
    if (static_cast<int>(cover.code.size()) != d.id_bound()) {
        throw std::invalid_argument("cover vertex count does not match digraph");
    }
    VerifyResult r;
    for (const auto& [u, v] : d.edges()) {
        if ((cover.code[u] & ~cover.code[v]) == 0) {
            r.uncovered.emplace_back(u, v);
        }
    }
    return r;
}

CutCover cover_from_codes(const Digraph& d, const std::vector<CodeWord>& codes) {
    if (static_cast<int>(codes.size()) != d.id_bound()) {
        throw std::invalid_argument("codes size does not match digraph");
    }
    int k = codes.empty() ? 0 : codes.front().width;
    if (k < 0 || k > 32) {
        throw std::invalid_argument("code width must be in 0..32");
    }
    CutCover cover;
    cover.k = k;
    cover.code.reserve(codes.size());
    for (const CodeWord& c : codes) {
        if (c.width != k) {
            throw std::invalid_argument("code width mismatch: expected " + std::to_string(k) +
                                        ", got " + std::to_string(c.width));
        }
        if (k < 32 && (c.bits >> k) != 0) {
            throw std::invalid_argument("code word has bits outside its width");
        }
        cover.code.push_back(c.bits);
    }
    return cover;
}

std::pair<std::vector<int>, int> degeneracy_order(const Digraph& d) {
    const int nb = d.id_bound();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nb));
    std::vector<int> deg(static_cast<std::size_t>(nb), 0);
    std::vector<char> removed(static_cast<std::size_t>(nb), 1);
    for (int v : d.vertices()) {
        adj[v] = d.underlying_neighbors(v);
        deg[v] = static_cast<int>(adj[v].size());
        removed[v] = 0;
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(d.vertex_count()));
    int degeneracy = 0;
    for (int step = 0; step < d.vertex_count(); ++step) {
        int best = -1;
        for (int v : d.vertices()) {
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) {
                best = v;
            }
        }
        degeneracy = std::max(degeneracy, deg[best]);
        order.push_back(best);
        removed[best] = 1;
        for (int w : adj[best]) {
            if (!removed[w]) {
                --deg[w];
            }
        }
    }
    return {order, degeneracy};
}

std::vector<int> greedy_color_underlying(const Digraph& d, const std::vector<int>& ordering) {
    if (static_cast<int>(ordering.size()) != d.vertex_count()) {
        throw std::invalid_argument("ordering must cover every present vertex exactly once");
    }
    std::vector<int> cls(static_cast<std::size_t>(d.id_bound()), -1);
    std::vector<char> seen(static_cast<std::size_t>(d.id_bound()), 0);
    for (int v : ordering) {
        if (!d.has_vertex(v) || seen[v]) {
            throw std::invalid_argument("ordering is not a permutation of the present vertices");
        }
        seen[v] = 1;
    }
    std::vector<char> used;
    for (int v : ordering) {
        used.assign(used.size(), 0);
        for (int w : d.underlying_neighbors(v)) {
            int c = cls[w];
            if (c >= 0) {
                if (static_cast<std::size_t>(c) >= used.size()) {
                    used.resize(static_cast<std::size_t>(c) + 1, 0);
                }
                used[c] = 1;
            }
        }
        int c = 0;
        while (static_cast<std::size_t>(c) < used.size() && used[c]) {
            ++c;
        }
        cls[v] = c;
    }
    return cls;
}

CutCover cover_via_coloring(const Digraph& d) {
    auto [order, degeneracy] = degeneracy_order(d);
    (void)degeneracy;
    std::reverse(order.begin(), order.end());
    std::vector<int> cls = greedy_color_underlying(d, order);
    int m = 0;
    for (int v : d.vertices()) {
        m = std::max(m, cls[v] + 1);
    }
    if (m == 0) {
        return CutCover{0, std::vector<std::uint32_t>(static_cast<std::size_t>(d.id_bound()), 0)};
    }
    std::vector<CodeWord> class_codes = antichain_codes(m);
    int k = class_codes.front().width;
    std::vector<CodeWord> codes(static_cast<std::size_t>(d.id_bound()), CodeWord{k, 0});
    for (int v : d.vertices()) {
        codes[v] = class_codes[static_cast<std::size_t>(cls[v])];
    }
    return cover_from_codes(d, codes);
}

CutCover theorem3_cover(const Digraph& d, int k) {
    MembershipCheck mc = find_bipartition(d, k, k);
    if (!mc.is_member()) {
        throw NotMemberError("not in D(" + std::to_string(k) + "," + std::to_string(k) +
                             "): vertex " + std::to_string(mc.offending) +
                             " violates both degree bounds");
    }
    const Bipartition& p = *mc.bipartition;

    std::vector<Edge> kept;
    std::vector<bool> present(static_cast<std::size_t>(d.id_bound()), false);
    for (int v : d.vertices()) {
        present[v] = true;
    }
    for (const auto& [u, v] : d.edges()) {
        if (!(p.side[u] == Side::X && p.side[v] == Side::Y)) {
            kept.emplace_back(u, v);
        }
    }
    Digraph rest(d.id_bound(), kept, present);

    CutCover base = cover_via_coloring(rest);
    if (base.k >= 32) {
        throw std::invalid_argument("too many cuts for 32-bit code words");
    }
    CutCover out;
    out.k = base.k + 1;
    out.code = base.code;
    for (int v : d.vertices()) {
        if (p.side[v] == Side::X) {
            out.code[v] |= 1u << base.k;
        }
    }
    if (!verify_cover(d, out).ok()) {
        throw InvariantViolation("theorem3_cover produced an invalid cover");
    }
    return out;
}

namespace {

void check_coloring_shapes(const Digraph& d, const Bipartition& p, const Coloring& coloring) {
    if (static_cast<int>(p.side.size()) != d.id_bound() ||
        static_cast<int>(coloring.color.size()) != d.id_bound()) {
        throw std::invalid_argument("bipartition/coloring size does not match digraph");
    }
}

}  // namespace

bool is_good_coloring(const Digraph& d, const Bipartition& p, const Coloring& coloring) {
    check_coloring_shapes(d, p, coloring);
    for (int v : d.vertices()) {
        int c = coloring.color[v];
        if (c == 0) {
            throw std::invalid_argument("coloring is partial: vertex " + std::to_string(v) +
                                        " is unassigned");
        }
        if (c < 0 || c > Color::kCount) {
            throw std::invalid_argument("invalid color index " + std::to_string(c));
        }
    }
    for (const auto& [u, v] : d.edges()) {
        if (p.side[u] == p.side[v]) {
            if (coloring.color[u] == coloring.color[v]) {
                return false;
            }
        } else if (p.side[u] == Side::Y) {
            if (!adjacent(Color::from_index(coloring.color[u]),
                          Color::from_index(coloring.color[v]))) {
                return false;
            }
        }
    }
    return true;
}

CutCover cuts_from_good_coloring(const Bipartition& p, const Coloring& coloring) {
    if (p.side.size() != coloring.color.size()) {
        throw std::invalid_argument("bipartition and coloring sizes differ");
    }
    constexpr std::uint32_t kFull = 0b11111u;
    CutCover cover;
    cover.k = 5;
    cover.code.reserve(p.side.size());
    for (std::size_t i = 0; i < p.side.size(); ++i) {
        int c = coloring.color[i];
        if (c == 0) {
            cover.code.push_back(0);
            continue;
        }
        std::uint32_t mask = Color::from_index(c).elem_mask();
        cover.code.push_back(p.side[i] == Side::Y ? mask : (kFull ^ mask));
    }
    return cover;
}

namespace {

// Elimination bookkeeping for theorem4_cover. `partner` is -1 for a single
// removal; otherwise `vertex` is the X endpoint and `partner` the Y endpoint
// of the removed edge (partner, vertex).
struct Removal {
    int vertex;
    int partner;
};

class GoodColoringBuilder {
public:
    GoodColoringBuilder(const Digraph& d, Bipartition p) : d_(d), part_(std::move(p)) {
        alive_.assign(static_cast<std::size_t>(d.id_bound()), 0);
        for (int v : d_.vertices()) {
            alive_[v] = 1;
            (side(v) == Side::X ? nx_ : ny_)++;
        }
        coloring_.color.assign(static_cast<std::size_t>(d.id_bound()), 0);
    }

    Coloring run() {
        eliminate();
        color_base();
        reinsert();
        return coloring_;
    }

private:
    Side side(int v) const { return part_.side[v]; }

    RestrictedDegrees alive_degrees(int v) const {
        RestrictedDegrees r;
        for (int w : d_.in_neighbors(v)) {
            if (alive_[w]) {
                (side(w) == Side::X ? r.in_x : r.in_y)++;
            }
        }
        for (int w : d_.out_neighbors(v)) {
            if (alive_[w]) {
                (side(w) == Side::X ? r.out_x : r.out_y)++;
            }
        }
        return r;
    }

    void remove(int v) {
        alive_[v] = 0;
        (side(v) == Side::X ? nx_ : ny_)--;
    }

    void restore(int v) {
        alive_[v] = 1;
        (side(v) == Side::X ? nx_ : ny_)++;
    }

    template <typename Pred>
    int first_alive(Side s, Pred pred) const {
        for (int v : d_.vertices()) {
            if (alive_[v] && side(v) == s && pred(alive_degrees(v))) {
                return v;
            }
        }
        return -1;
    }

    void eliminate() {
        while (nx_ > 4 || ny_ > 4) {
            int v = first_alive(Side::X, [](const RestrictedDegrees& r) { return r.in_x > r.out_x; });
            if (v < 0) {
                v = first_alive(Side::Y,
                                [](const RestrictedDegrees& r) { return r.out_y > r.in_y; });
            }
            if (v < 0) {
                v = first_alive(Side::X, [](const RestrictedDegrees& r) {
                    return r.in_x == r.out_x && r.in_y <= 1;
                });
            }
            if (v < 0) {
                v = first_alive(Side::Y, [](const RestrictedDegrees& r) {
                    return r.out_y == r.in_y && r.out_x <= 1;
                });
            }
            if (v >= 0) {
                stack_.push_back({v, -1});
                remove(v);
                continue;
            }
            // Lexicographically first Y->X edge; one must exist here.
            int px = -1;
            int py = -1;
            for (int y : d_.vertices()) {
                if (!alive_[y] || side(y) != Side::Y) {
                    continue;
                }
                for (int x : d_.out_neighbors(y)) {
                    if (alive_[x] && side(x) == Side::X) {
                        py = y;
                        px = x;
                        break;
                    }
                }
                if (px >= 0) {
                    break;
                }
            }
            if (px < 0) {
                throw InvariantViolation("elimination stuck: no reduction rule applies");
            }
            stack_.push_back({px, py});
            remove(px);
            remove(py);
        }
    }

    void color_base() {
        int next_x = 1;
        int next_y = 1;
        for (int v : d_.vertices()) {
            if (!alive_[v]) {
                continue;
            }
            int& next = (side(v) == Side::X) ? next_x : next_y;
            if (next > 4) {
                throw InvariantViolation("base case has more than four vertices on one side");
            }
            coloring_.color[v] = next++;
        }
    }

    // Colors usable for v given the current partial coloring: not used by an
    // alive same-side neighbor, and adjacent to every alive constraint-side
    // neighbor (in-neighbors in Y for v in X, out-neighbors in X for v in Y).
    std::vector<Color> allowed(int v) const {
        std::array<bool, Color::kCount + 1> banned{};
        for (int w : d_.underlying_neighbors(v)) {
            if (alive_[w] && side(w) == side(v)) {
                banned[static_cast<std::size_t>(coloring_.color[w])] = true;
            }
        }
        std::vector<Color> constraint;
        const std::vector<int>& nbrs =
            (side(v) == Side::X) ? d_.in_neighbors(v) : d_.out_neighbors(v);
        for (int w : nbrs) {
            if (alive_[w] && side(w) != side(v)) {
                constraint.push_back(Color::from_index(coloring_.color[w]));
            }
        }
        std::vector<Color> pool = constraint.empty() ? Color::all() : common_neighbors(constraint);
        std::vector<Color> out;
        for (Color c : pool) {
            if (!banned[static_cast<std::size_t>(c.index())]) {
                out.push_back(c);
            }
        }
        return out;
    }

    void reinsert() {
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
            if (it->partner < 0) {
                std::vector<Color> opts = allowed(it->vertex);
                if (opts.empty()) {
                    throw InvariantViolation("no color available when reinserting vertex " +
                                             std::to_string(it->vertex));
                }
                coloring_.color[it->vertex] = opts.front().index();
                restore(it->vertex);
            } else {
                int x = it->vertex;
                int y = it->partner;
                std::vector<Color> ox = allowed(x);
                std::vector<Color> oy = allowed(y);
                if (ox.size() < 2 || oy.size() < 2) {
                    throw InvariantViolation("fewer than two colors available when reinserting pair (" +
                                             std::to_string(x) + "," + std::to_string(y) + ")");
                }
                auto [cx, cy] = cross_neighbor_pair({ox[0], ox[1]}, {oy[0], oy[1]});
                coloring_.color[x] = cx.index();
                coloring_.color[y] = cy.index();
                restore(x);
                restore(y);
            }
        }
    }

    const Digraph& d_;
    Bipartition part_;
    std::vector<char> alive_;
    Coloring coloring_;
    std::vector<Removal> stack_;
    int nx_ = 0;
    int ny_ = 0;
};

}  // namespace

Theorem4Result theorem4_cover(const Digraph& d) {
    MembershipCheck mc = find_bipartition(d, 4, 4);
    if (!mc.is_member()) {
        throw NotMemberError("not in D(4,4): vertex " + std::to_string(mc.offending) +
                             " violates both degree bounds");
    }
    Theorem4Result result;
    result.certificate.bipartition = std::move(*mc.bipartition);
    result.certificate.coloring =
        GoodColoringBuilder(d, result.certificate.bipartition).run();
    if (!is_good_coloring(d, result.certificate.bipartition, result.certificate.coloring)) {
        throw InvariantViolation("constructed coloring is not good");
    }
    result.cover =
        cuts_from_good_coloring(result.certificate.bipartition, result.certificate.coloring);
    if (!verify_cover(d, result.cover).ok()) {
        throw InvariantViolation("five-cut cover failed verification");
    }
    return result;
}

CutCover drop_empty_cuts(const Digraph& d, const CutCover& cover) {
    if (static_cast<int>(cover.code.size()) != d.id_bound()) {
        throw std::invalid_argument("cover vertex count does not match digraph");
    }
    std::uint32_t covering = 0;
    for (const auto& [u, v] : d.edges()) {
        covering |= cover.code[u] & ~cover.code[v];
    }
    if (cover.k < 32) {
        covering &= (1u << cover.k) - 1u;
    }
    CutCover out;
    out.k = 0;
    out.code.assign(cover.code.size(), 0);
    for (int i = 0; i < cover.k; ++i) {
        if (!((covering >> i) & 1u)) {
            continue;
        }
        for (std::size_t v = 0; v < cover.code.size(); ++v) {
            if ((cover.code[v] >> i) & 1u) {
                out.code[v] |= 1u << out.k;
            }
        }
        ++out.k;
    }
    return out;
}

std::string serialize_cover(const CutCover& cover) {
    std::string out =
        "k " + std::to_string(cover.k) + " n " + std::to_string(cover.code.size()) + "\n";
    for (int i = 1; i <= cover.k; ++i) {
        for (std::size_t v = 0; v < cover.code.size(); ++v) {
            out += cover.in_a(i, static_cast<int>(v)) ? 'A' : 'B';
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::pair<int, std::string>> nonblank_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (!raw.empty() && raw.back() == '\r') {
            raw.remove_suffix(1);
        }
        if (raw.find_first_not_of(" \t") != std::string_view::npos) {
            lines.emplace_back(number, std::string(raw));
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return lines;
}

}  // namespace

CutCover parse_cover(std::string_view text) {
    auto lines = nonblank_lines(text);
    if (lines.empty()) {
        throw ParseError(1, "missing cover header");
    }
    std::istringstream header(lines[0].second);
    std::string kw1;
    std::string kw2;
    long long k = -1;
    long long n = -1;
    std::string extra;
    if (!(header >> kw1 >> k >> kw2 >> n) || kw1 != "k" || kw2 != "n" || k < 0 || n < 0 ||
        (header >> extra)) {
        throw ParseError(lines[0].first, "malformed cover header, expected \"k <k> n <n>\"");
    }
    if (k > 32) {
        throw ParseError(lines[0].first, "unsupported cut count " + std::to_string(k));
    }
    if (static_cast<long long>(lines.size()) - 1 != k) {
        throw ParseError(lines.back().first + 1,
                         "expected " + std::to_string(k) + " cut lines, found " +
                             std::to_string(lines.size() - 1));
    }
    CutCover cover;
    cover.k = static_cast<int>(k);
    cover.code.assign(static_cast<std::size_t>(n), 0);
    for (long long i = 1; i <= k; ++i) {
        const auto& [number, line] = lines[static_cast<std::size_t>(i)];
        if (static_cast<long long>(line.size()) != n) {
            throw ParseError(number, "cut line has length " + std::to_string(line.size()) +
                                         ", expected " + std::to_string(n));
        }
        for (long long v = 0; v < n; ++v) {
            char c = line[static_cast<std::size_t>(v)];
            if (c == 'A') {
                cover.code[static_cast<std::size_t>(v)] |= 1u << (i - 1);
            } else if (c != 'B') {
                throw ParseError(number, std::string("invalid cut character '") + c + "'");
            }
        }
    }
    return cover;
}

std::string serialize_certificate(const GoodColoringCertificate& cert) {
    if (cert.bipartition.side.size() != cert.coloring.color.size()) {
        throw std::invalid_argument("certificate bipartition and coloring sizes differ");
    }
    std::string out = serialize_bipartition(cert.bipartition);
    for (std::size_t i = 0; i < cert.coloring.color.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(cert.coloring.color[i]);
    }
    out += '\n';
    return out;
}

GoodColoringCertificate parse_certificate(std::string_view text) {
    auto lines = nonblank_lines(text);
    if (lines.size() != 2) {
        throw ParseError(lines.empty() ? 1 : lines[0].first,
                         "certificate must have a side line and a color line");
    }
    GoodColoringCertificate cert;
    cert.bipartition = parse_bipartition(lines[0].second + "\n");
    std::istringstream in(lines[1].second);
    int c = 0;
    while (in >> c) {
        if (c < 0 || c > Color::kCount) {
            throw ParseError(lines[1].first, "color index out of range: " + std::to_string(c));
        }
        cert.coloring.color.push_back(c);
    }
    if (!in.eof()) {
        throw ParseError(lines[1].first, "invalid color index token");
    }
    if (cert.coloring.color.size() != cert.bipartition.side.size()) {
        throw ParseError(lines[1].first, "color count does not match side count");
    }
    return cert;
}

}  // namespace dicut

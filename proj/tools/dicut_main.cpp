// Command-line front end: membership checks, cover construction and
// verification, exact minimization, and instance generation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dicut/cover.hpp"
#include "dicut/digraph.hpp"
#include "dicut/exact.hpp"
#include "dicut/instances.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        spill(out_path, text);
    }
}

struct CheckArgs {
    std::string file;
    int k = 0;
    int l = 0;
    std::string out;
};

int run_check(const CheckArgs& a) {
    dicut::Digraph d = dicut::parse_edge_list(slurp(a.file));
    dicut::MembershipCheck mc = dicut::find_bipartition(d, a.k, a.l);
    if (!mc.is_member()) {
        std::cout << "not a member of D(" << a.k << "," << a.l << "): vertex " << mc.offending
                  << " has indegree " << d.in_degree(mc.offending) << " > " << a.k
                  << " and outdegree " << d.out_degree(mc.offending) << " > " << a.l << "\n";
        return kExitNegative;
    }
    emit(a.out, dicut::serialize_bipartition(*mc.bipartition));
    if (!a.out.empty()) {
        std::cout << "member of D(" << a.k << "," << a.l << ")\n";
    }
    return kExitOk;
}

struct CoverArgs {
    std::string file;
    std::string method = "auto";
    std::optional<int> k;
    std::string out;
    std::string certificate_out;
};

int run_cover(const CoverArgs& a) {
    dicut::Digraph d = dicut::parse_edge_list(slurp(a.file));
    std::string method = a.method;
    if (method == "auto") {
        method = dicut::find_bipartition(d, 4, 4).is_member() ? "theorem4" : "coloring";
    }
    if (!a.certificate_out.empty() && method != "theorem4") {
        std::cerr << "--certificate-out is only produced by the theorem4 method\n";
        return kExitUsage;
    }
    dicut::CutCover cover;
    if (method == "coloring") {
        cover = dicut::cover_via_coloring(d);
    } else if (method == "theorem3") {
        if (!a.k.has_value()) {
            std::cerr << "method theorem3 requires --k\n";
            return kExitUsage;
        }
        try {
            cover = dicut::theorem3_cover(d, *a.k);
        } catch (const dicut::NotMemberError& e) {
            std::cout << e.what() << "\n";
            return kExitNegative;
        }
    } else if (method == "theorem4") {
        try {
            dicut::Theorem4Result res = dicut::theorem4_cover(d);
            cover = std::move(res.cover);
            if (!a.certificate_out.empty()) {
                spill(a.certificate_out, dicut::serialize_certificate(res.certificate));
            }
        } catch (const dicut::NotMemberError& e) {
            std::cout << e.what() << "\n";
            return kExitNegative;
        }
    } else {
        std::cerr << "unknown method " << method << "\n";
        return kExitUsage;
    }
    emit(a.out, dicut::serialize_cover(cover));
    if (!a.out.empty()) {
        std::cout << "cuts = " << cover.k << " (verified)\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string file;
    std::string cover_file;
};

int run_verify(const VerifyArgs& a) {
    dicut::Digraph d = dicut::parse_edge_list(slurp(a.file));
    dicut::CutCover cover = dicut::parse_cover(slurp(a.cover_file));
    dicut::VerifyResult r = dicut::verify_cover(d, cover);
    if (r.ok()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    for (const auto& [u, v] : r.uncovered) {
        std::cout << "uncovered: " << u << " " << v << "\n";
    }
    return kExitNegative;
}

struct ExactArgs {
    std::string file;
    int max_k = 0;
    double timeout_s = 1e9;
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max() / 2;
    int threads = 1;
    std::string export_cnf_prefix;
    std::string out;
};

int run_exact(const ExactArgs& a) {
    dicut::Digraph d = dicut::parse_edge_list(slurp(a.file));
    dicut::SearchBudget budget{a.max_nodes, a.timeout_s};
    dicut::SearchOptions options;
    options.threads = a.threads;
    dicut::MinCoverResult r = dicut::min_cover_number(d, a.max_k, budget, options);

    if (!a.export_cnf_prefix.empty() && d.edge_count() > 0) {
        int attempted = a.max_k;
        if (r.status == dicut::SearchStatus::found) {
            attempted = r.min_cuts;
        } else if (r.status == dicut::SearchStatus::timeout) {
            attempted = std::min(a.max_k, r.proven_infeasible_up_to + 1);
        }
        for (int k = 1; k <= attempted; ++k) {
            spill(a.export_cnf_prefix + ".k" + std::to_string(k) + ".cnf", dicut::export_cnf(d, k));
        }
    }

    std::cout << "nodes = " << r.nodes_explored << "\n";
    switch (r.status) {
        case dicut::SearchStatus::found: {
            std::cout << "nu = " << r.min_cuts << "\n";
            std::string text = dicut::serialize_cover(dicut::cover_from_codes(d, r.witness));
            if (a.out.empty()) {
                std::cout << text;
            } else {
                spill(a.out, text);
            }
            return kExitOk;
        }
        case dicut::SearchStatus::none:
            std::cout << "no cover with <= " << a.max_k << " cuts\n";
            return kExitNegative;
        case dicut::SearchStatus::timeout:
            if (r.proven_infeasible_up_to >= 0) {
                std::cout << "timeout: proven no cover with <= " << r.proven_infeasible_up_to
                          << " cuts\n";
            } else {
                std::cout << "timeout: no bound proven\n";
            }
            return kExitBudget;
    }
    return kExitUsage;
}

struct GenArgs {
    std::string kind;
    int n = 0;
    int nx = 0;
    int ny = 0;
    int k = 0;
    int l = 0;
    double density = 0.5;
    std::uint64_t seed = 0;
    std::string out;
    std::string labels_out;
};

int run_gen(const GenArgs& a) {
    dicut::Digraph d;
    std::string labels_text;
    if (a.kind == "complete") {
        d = dicut::complete_digraph(a.n);
    } else if (a.kind == "d1") {
        d = dicut::circulant_tournament7();
    } else if (a.kind == "dstar") {
        auto [graph, labels] = dicut::build_dstar();
        d = std::move(graph);
        labels_text = dicut::serialize_labels(labels);
    } else if (a.kind == "random") {
        d = dicut::random_dkl(a.nx, a.ny, a.k, a.l, a.density, a.seed);
    } else {
        std::cerr << "unknown kind " << a.kind << " (expected complete|d1|dstar|random)\n";
        return kExitUsage;
    }
    emit(a.out, dicut::serialize_edge_list(d));
    if (!labels_text.empty()) {
        std::string labels_path = a.labels_out;
        if (labels_path.empty() && !a.out.empty()) {
            labels_path = a.out + ".labels";
        }
        if (!labels_path.empty()) {
            spill(labels_path, labels_text);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed cut cover toolkit"};
    app.require_subcommand(1);

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "test membership in D(k,l)");
    check->add_option("file", check_args.file, "edge-list instance")->required();
    check->add_option("--k", check_args.k, "indegree bound")->required();
    check->add_option("--l", check_args.l, "outdegree bound")->required();
    check->add_option("--out", check_args.out, "write the bipartition here");

    CoverArgs cover_args;
    CLI::App* cover = app.add_subcommand("cover", "construct a verified cut cover");
    cover->add_option("file", cover_args.file, "edge-list instance")->required();
    cover->add_option("--method", cover_args.method, "auto|coloring|theorem3|theorem4")
        ->default_val("auto");
    cover->add_option("--k", cover_args.k, "degree bound for theorem3");
    cover->add_option("--out", cover_args.out, "write the cover here");
    cover->add_option("--certificate-out", cover_args.certificate_out,
                      "write the good-coloring certificate here (theorem4 only)");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "check a cover file against an instance");
    verify->add_option("file", verify_args.file, "edge-list instance")->required();
    verify->add_option("cover", verify_args.cover_file, "cover file")->required();

    ExactArgs exact_args;
    CLI::App* exact = app.add_subcommand("exact", "exact minimum cut cover by search");
    exact->add_option("file", exact_args.file, "edge-list instance")->required();
    exact->add_option("--max-k", exact_args.max_k, "largest cut count to try")->required();
    exact->add_option("--timeout", exact_args.timeout_s, "wall-clock budget in seconds");
    exact->add_option("--max-nodes", exact_args.max_nodes, "search node budget");
    exact->add_option("--parallel", exact_args.threads, "worker threads for the top-level split");
    exact->add_option("--export-cnf", exact_args.export_cnf_prefix,
                      "write <prefix>.k<k>.cnf for each attempted k");
    exact->add_option("--out", exact_args.out, "write the witness cover here");

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("kind", gen_args.kind, "complete|d1|dstar|random")->required();
    gen->add_option("--n", gen_args.n, "vertex count (complete)");
    gen->add_option("--nx", gen_args.nx, "size of the indegree-bounded block (random)");
    gen->add_option("--ny", gen_args.ny, "size of the outdegree-bounded block (random)");
    gen->add_option("--k", gen_args.k, "indegree bound (random)");
    gen->add_option("--l", gen_args.l, "outdegree bound (random)");
    gen->add_option("--density", gen_args.density, "edge sampling probability (random)");
    gen->add_option("--seed", gen_args.seed, "RNG seed (random)");
    gen->add_option("--out", gen_args.out, "write the edge list here");
    gen->add_option("--labels-out", gen_args.labels_out, "write the dstar label map here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            return run_check(check_args);
        }
        if (cover->parsed()) {
            return run_cover(cover_args);
        }
        if (verify->parsed()) {
            return run_verify(verify_args);
        }
        if (exact->parsed()) {
            return run_exact(exact_args);
        }
        if (gen->parsed()) {
            return run_gen(gen_args);
        }
    } catch (const dicut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dicut/colors.hpp"
#include "dicut/digraph.hpp"

namespace dicut {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max() / 2;
    double wall_time_s = 1e15;
};

struct SearchOptions {
    bool symmetry_breaking = true;
    /// >1 splits the top-level branches across threads; the decision and the
    /// reported witness match the single-threaded search whenever the search
    /// completes within budget.
    int threads = 1;
};

enum class SearchStatus { found, none, timeout };

struct SearchResult {
    SearchStatus status = SearchStatus::none;
    /// Per-vertex code words of width k, present iff status == found.
    std::vector<CodeWord> witness;
    std::uint64_t nodes_explored = 0;
};

/// Complete backtracking decision: does a k-cut cover of d exist? Vertices
/// are assigned code words in decreasing underlying-degree order; domains
/// are pruned edge by edge, with unit rules (a vertex with an out-edge is
/// never the empty code, one with an in-edge never the full code) and the
/// first vertex restricted to one canonical code per cardinality.
SearchResult exists_cover(const Digraph& d, int k, const SearchBudget& budget = {},
                          const SearchOptions& options = {});

struct MinCoverResult {
    /// found: min_cuts is the minimum. none: no cover with <= k_max cuts.
    /// timeout: proven_infeasible_up_to is the best lower-bound evidence.
    SearchStatus status = SearchStatus::none;
    int min_cuts = -1;
    int proven_infeasible_up_to = -1;
    std::vector<CodeWord> witness;
    std::uint64_t nodes_explored = 0;
};

/// Smallest k <= k_max admitting a cover, trying k = 0, 1, 2, ... within a
/// shared budget.
MinCoverResult min_cover_number(const Digraph& d, int k_max, const SearchBudget& budget = {},
                                const SearchOptions& options = {});

/// DIMACS CNF satisfiable iff a k-cut cover exists. Variables x(v,i) = v*k+i
/// for v on the A side of cut i, auxiliaries z(e,i) = n*k + e*k + i for
/// "edge e is covered by cut i". Exactly k*(n+m) variables and m*(2k+1)
/// clauses.
std::string export_cnf(const Digraph& d, int k);

}  // namespace dicut

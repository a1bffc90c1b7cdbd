#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dicut/digraph.hpp"

namespace dicut {

/// Both orientations of every pair: n(n-1) edges.
Digraph complete_digraph(int n);

/// Orientation of K_7 where each vertex points at the three next higher
/// indices modulo 7. Every vertex has indegree 3 and outdegree 3.
Digraph circulant_tournament7();

/// Name -> vertex id map for the 49-vertex witness digraph: x1..x7 are ids
/// 0..6, y1..y7 ids 7..13, then z_i_j_k for the 3-subsets {i,j,k} of {1..7}
/// in lexicographic order, ids 14..48.
struct DStarLabels {
    std::vector<std::pair<std::string, int>> entries;

    int id_of(const std::string& name) const;
};

/// The 49-vertex, 441-edge member of D(3,3): two circulant tournaments, one
/// z-vertex below every 3-subset of the first, and all edges from the first
/// tournament and the z block into the second tournament.
std::pair<Digraph, DStarLabels> build_dstar();

std::string serialize_labels(const DStarLabels& labels);

/// Seeded random member of D(k,l): vertices 0..nx-1 keep indegree <= k,
/// vertices nx..nx+ny-1 keep outdegree <= l. Candidate edges are sampled in
/// lexicographic order with probability `density` and dropped (not retried)
/// when they would break a bound.
Digraph random_dkl(int nx, int ny, int k, int l, double density, std::uint64_t seed);

}  // namespace dicut

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dicut/colors.hpp"
#include "dicut/digraph.hpp"

namespace dicut {

/// Input is not in the requested degree class D(k,l).
class NotMemberError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal guarantee of a constructive algorithm failed. This is never
/// expected on valid input; it is surfaced loudly instead of being repaired.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// k directed cuts, each a full A/B bipartition of the id space. Stored as a
/// per-vertex code word: bit i-1 of code[v] set iff v is on the A side of
/// cut i. Edge (u,v) is covered iff code(u) \ code(v) is nonempty.
struct CutCover {
    int k = 0;
    std::vector<std::uint32_t> code;

    bool in_a(int cut, int v) const { return (code[static_cast<std::size_t>(v)] >> (cut - 1)) & 1u; }
};

struct VerifyResult {
    std::vector<Edge> uncovered;
    bool ok() const { return uncovered.empty(); }
};

VerifyResult verify_cover(const Digraph& d, const CutCover& cover);

/// Cuts from per-vertex code words of common width k: A_i = {v : i in code(v)}.
CutCover cover_from_codes(const Digraph& d, const std::vector<CodeWord>& codes);

/// Ordering v_1..v_n of the present vertices such that each v_j has at most
/// `degeneracy` underlying neighbors among v_{j+1}..v_n, plus the exact
/// degeneracy of the underlying simple graph.
std::pair<std::vector<int>, int> degeneracy_order(const Digraph& d);

/// Greedy proper coloring of the underlying graph, processing `ordering`
/// front to back with the lowest-free-class rule. Returns 0-based class ids
/// (absent vertices get -1). On the reverse of a degeneracy order this uses
/// at most degeneracy+1 classes.
std::vector<int> greedy_color_underlying(const Digraph& d, const std::vector<int>& ordering);

/// Colors the underlying graph into m classes on the reverse degeneracy
/// order, assigns antichain codes to the classes and returns the resulting
/// c(m)-cut cover. Always verifies.
CutCover cover_via_coloring(const Digraph& d);

/// Cover for D in D(k,k): peel off the X->Y cut of the canonical
/// bipartition, cover the rest via coloring, append the peeled cut last.
/// At most c(2k+1)+1 cuts.
CutCover theorem3_cover(const Digraph& d, int k);

/// Per-vertex color assignment; 0 means unassigned, else a Color index 1..10.
struct Coloring {
    std::vector<int> color;
};

/// Checks the two good-coloring conditions edge by edge: endpoints on the
/// same side have distinct colors, and Y->X edges have adjacent colors.
/// X->Y edges are unconstrained.
bool is_good_coloring(const Digraph& d, const Bipartition& p, const Coloring& coloring);

/// The five cuts induced by a coloring: code(v) is the color's 2-subset for
/// v in Y and its complement in {1..5} for v in X. When the coloring is good
/// for p, the result covers every edge.
CutCover cuts_from_good_coloring(const Bipartition& p, const Coloring& coloring);

struct GoodColoringCertificate {
    Bipartition bipartition;
    Coloring coloring;
};

struct Theorem4Result {
    GoodColoringCertificate certificate;
    CutCover cover;
};

/// Five-cut cover for any D in D(4,4): eliminate vertices by the reduction
/// rules down to at most four per side, color the base with S1..S4, then
/// reinsert in reverse order picking lowest allowed colors. The returned
/// cover is verified and always has exactly five cuts.
Theorem4Result theorem4_cover(const Digraph& d);

/// Optional post-pass: drop cuts that cover no edge of d, compacting the
/// remaining cut indices in order.
CutCover drop_empty_cuts(const Digraph& d, const CutCover& cover);

/// Cover file format: header "k <k> n <n>", then k lines of length n over
/// {A,B} giving each vertex's side in cut i.
std::string serialize_cover(const CutCover& cover);
CutCover parse_cover(std::string_view text);

/// Certificate file format: one X/Y line, then one line of per-vertex color
/// indices (0 = uncolored).
std::string serialize_certificate(const GoodColoringCertificate& cert);
GoodColoringCertificate parse_certificate(std::string_view text);

}  // namespace dicut

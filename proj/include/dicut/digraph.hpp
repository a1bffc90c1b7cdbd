#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dicut {

/// Ordered pair (tail, head).
using Edge = std::pair<int, int>;

/// Raised by the text-format parsers; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Immutable digraph without loops or parallel edges. Vertex ids are dense
/// 0..n-1 at construction; removing vertices keeps the original ids, so a
/// graph may have holes in its id space (absent ids answer has_vertex false).
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, const std::vector<Edge>& edges);
    Digraph(int n, const std::vector<Edge>& edges, std::vector<bool> present);

    /// Vertex ids live in [0, id_bound()); not all of them need be present.
    int id_bound() const { return static_cast<int>(out_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    bool has_vertex(int v) const { return v >= 0 && v < id_bound() && present_[v]; }
    /// Present vertex ids, ascending.
    const std::vector<int>& vertices() const { return vertices_; }

    int edge_count() const { return edge_count_; }
    /// All edges sorted by (tail, head).
    std::vector<Edge> edges() const;
    bool has_edge(int u, int v) const;

    const std::vector<int>& out_neighbors(int v) const;
    const std::vector<int>& in_neighbors(int v) const;
    int out_degree(int v) const;
    int in_degree(int v) const;
    int degree(int v) const;
    /// Distinct neighbors in the underlying simple graph (a 2-cycle counts once).
    std::vector<int> underlying_neighbors(int v) const;
    int underlying_degree(int v) const;

    /// Induced subdigraph on V minus s; ids are preserved, not compacted.
    Digraph remove_vertices(const std::vector<int>& s) const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<bool> present_;
    std::vector<int> vertices_;
    int edge_count_ = 0;
};

enum class Side : std::uint8_t { X, Y };

inline char to_char(Side s) { return s == Side::X ? 'X' : 'Y'; }

/// Per-vertex X/Y assignment, indexed by vertex id.
struct Bipartition {
    std::vector<Side> side;
};

/// A vertex's in/out degrees restricted to each side of a bipartition.
struct RestrictedDegrees {
    int in_x = 0;
    int out_x = 0;
    int in_y = 0;
    int out_y = 0;
};

struct MembershipCheck {
    std::optional<Bipartition> bipartition;
    int offending = -1;  // one witness vertex when not a member
    bool is_member() const { return bipartition.has_value(); }
};

/// Splits V into X = {v : indeg(v) <= k} and Y = {v : outdeg(v) <= l} \ X.
/// Vertices satisfying both bounds go to X. Returns not-member with one
/// offending vertex if some vertex violates both bounds.
MembershipCheck find_bipartition(const Digraph& d, int k, int l);

RestrictedDegrees restricted_degrees(const Digraph& d, const Bipartition& p, int v);

/// Edge-list text format: '#' lines are comments, first data line "n m",
/// then exactly m lines "u v". Loops and duplicate edges are hard errors.
Digraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Digraph& d);

std::string serialize_bipartition(const Bipartition& p);
Bipartition parse_bipartition(std::string_view text);

struct CutCover;

/// Graphviz DOT output. With a cover, every edge is labeled with the lowest
/// cut index covering it; a cover that fails verification is rejected.
std::string export_dot(const Digraph& d, const CutCover* cover = nullptr);

}  // namespace dicut

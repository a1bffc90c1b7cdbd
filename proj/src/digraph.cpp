#include "dicut/digraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "dicut/cover.hpp"

namespace dicut {

Digraph::Digraph(int n) : Digraph(n, {}) {}

Digraph::Digraph(int n, const std::vector<Edge>& edges)
    : Digraph(n, edges, std::vector<bool>(static_cast<std::size_t>(std::max(n, 0)), true)) {}

Digraph::Digraph(int n, const std::vector<Edge>& edges, std::vector<bool> present) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be nonnegative");
    }
    if (static_cast<int>(present.size()) != n) {
        throw std::invalid_argument("present mask size does not match vertex count");
    }
    out_.assign(static_cast<std::size_t>(n), {});
    in_.assign(static_cast<std::size_t>(n), {});
    present_ = std::move(present);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
        }
        if (!present_[u] || !present_[v]) {
            throw std::invalid_argument("edge endpoint not present: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        }
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    for (auto& a : out_) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
            throw std::invalid_argument("duplicate edge");
        }
    }
    for (auto& a : in_) {
        std::sort(a.begin(), a.end());
    }
    edge_count_ = static_cast<int>(edges.size());
    for (int v = 0; v < n; ++v) {
        if (present_[v]) {
            vertices_.push_back(v);
        }
    }
}

void Digraph::check_vertex(int v) const {
    if (v < 0 || v >= id_bound()) {
        throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    }
    if (!present_[v]) {
        throw std::invalid_argument("vertex not present: " + std::to_string(v));
    }
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(edge_count_));
    for (int v : vertices_) {
        for (int w : out_[v]) {
            es.emplace_back(v, w);
        }
    }
    return es;
}

bool Digraph::has_edge(int u, int v) const {
    if (u < 0 || u >= id_bound() || v < 0 || v >= id_bound()) {
        return false;
    }
    if (!present_[u] || !present_[v]) {
        return false;
    }
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
    check_vertex(v);
    return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
    check_vertex(v);
    return in_[v];
}

int Digraph::out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }

int Digraph::in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

int Digraph::degree(int v) const { return in_degree(v) + out_degree(v); }

std::vector<int> Digraph::underlying_neighbors(int v) const {
    check_vertex(v);
    std::vector<int> merged;
    merged.reserve(out_[v].size() + in_[v].size());
    std::set_union(out_[v].begin(), out_[v].end(), in_[v].begin(), in_[v].end(),
                   std::back_inserter(merged));
    return merged;
}

int Digraph::underlying_degree(int v) const {
    return static_cast<int>(underlying_neighbors(v).size());
}

Digraph Digraph::remove_vertices(const std::vector<int>& s) const {
    std::vector<bool> keep = present_;
    for (int v : s) {
        check_vertex(v);
        keep[v] = false;
    }
    std::vector<Edge> kept_edges;
    for (int v : vertices_) {
        if (!keep[v]) {
            continue;
        }
        for (int w : out_[v]) {
            if (keep[w]) {
                kept_edges.emplace_back(v, w);
            }
        }
    }
    return Digraph(id_bound(), kept_edges, std::move(keep));
}

MembershipCheck find_bipartition(const Digraph& d, int k, int l) {
    if (k < 0 || l < 0) {
        throw std::invalid_argument("degree bounds must be nonnegative");
    }
    Bipartition p;
    p.side.assign(static_cast<std::size_t>(d.id_bound()), Side::X);
    for (int v : d.vertices()) {
        if (d.in_degree(v) <= k) {
            p.side[v] = Side::X;
        } else if (d.out_degree(v) <= l) {
            p.side[v] = Side::Y;
        } else {
            return MembershipCheck{std::nullopt, v};
        }
    }
    return MembershipCheck{std::move(p), -1};
}

RestrictedDegrees restricted_degrees(const Digraph& d, const Bipartition& p, int v) {
    if (static_cast<int>(p.side.size()) != d.id_bound()) {
        throw std::invalid_argument("bipartition size does not match digraph");
    }
    RestrictedDegrees r;
    for (int w : d.in_neighbors(v)) {
        (p.side[w] == Side::X ? r.in_x : r.in_y)++;
    }
    for (int w : d.out_neighbors(v)) {
        (p.side[w] == Side::X ? r.out_x : r.out_y)++;
    }
    return r;
}

namespace {

struct Line {
    int number;  // 1-based
    std::string text;
};

std::vector<Line> data_lines(std::string_view text) {
    std::vector<Line> lines;
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
        bool blank = raw.find_first_not_of(" \t") == std::string_view::npos;
        if (!blank && raw.front() != '#') {
            lines.push_back({number, std::string(raw)});
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return lines;
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
    std::istringstream in(s);
    std::string extra;
    if (!(in >> a >> b)) {
        return false;
    }
    if (in >> extra) {
        return false;
    }
    return true;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
    std::vector<Line> lines = data_lines(text);
    if (lines.empty()) {
        throw ParseError(1, "missing header line");
    }
    long long n = 0;
    long long m = 0;
    if (!parse_two_ints(lines[0].text, n, m) || n < 0 || m < 0) {
        throw ParseError(lines[0].number, "malformed header, expected \"<n> <m>\"");
    }
    if (static_cast<long long>(lines.size()) - 1 < m) {
        throw ParseError(lines.empty() ? 1 : lines.back().number + 1,
                         "unexpected end of input: expected " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1));
    }
    if (static_cast<long long>(lines.size()) - 1 > m) {
        throw ParseError(lines[static_cast<std::size_t>(m) + 1].number,
                         "unexpected content after " + std::to_string(m) + " edges");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<long long> seen;
    for (long long i = 0; i < m; ++i) {
        const Line& line = lines[static_cast<std::size_t>(i) + 1];
        long long u = 0;
        long long v = 0;
        if (!parse_two_ints(line.text, u, v)) {
            throw ParseError(line.number, "malformed edge, expected \"<u> <v>\"");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError(line.number, "vertex id out of range [0," + std::to_string(n) + ")");
        }
        if (u == v) {
            throw ParseError(line.number, "loop edge at vertex " + std::to_string(u));
        }
        long long key = u * n + v;
        if (!seen.insert(key).second) {
            throw ParseError(line.number,
                             "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Digraph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Digraph& d) {
    std::string out = std::to_string(d.id_bound()) + " " + std::to_string(d.edge_count()) + "\n";
    for (const auto& [u, v] : d.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

std::string serialize_bipartition(const Bipartition& p) {
    std::string out;
    out.reserve(p.side.size() + 1);
    for (Side s : p.side) {
        out += to_char(s);
    }
    out += '\n';
    return out;
}

Bipartition parse_bipartition(std::string_view text) {
    std::vector<Line> lines = data_lines(text);
    if (lines.size() != 1) {
        throw ParseError(lines.empty() ? 1 : lines[1].number, "expected a single X/Y line");
    }
    Bipartition p;
    p.side.reserve(lines[0].text.size());
    for (char c : lines[0].text) {
        if (c == 'X') {
            p.side.push_back(Side::X);
        } else if (c == 'Y') {
            p.side.push_back(Side::Y);
        } else {
            throw ParseError(lines[0].number, std::string("invalid side character '") + c + "'");
        }
    }
    return p;
}

std::string export_dot(const Digraph& d, const CutCover* cover) {
    if (cover != nullptr) {
        VerifyResult vr = verify_cover(d, *cover);
        if (!vr.ok()) {
            throw std::invalid_argument("cover does not cover the digraph: " +
                                        std::to_string(vr.uncovered.size()) + " uncovered edges");
        }
    }
    std::string out = "digraph G {\n";
    for (int v : d.vertices()) {
        out += "  " + std::to_string(v) + ";\n";
    }
    for (const auto& [u, v] : d.edges()) {
        out += "  " + std::to_string(u) + " -> " + std::to_string(v);
        if (cover != nullptr) {
            std::uint32_t diff = cover->code[u] & ~cover->code[v];
            int lowest = 1;
            while ((diff & 1u) == 0) {
                diff >>= 1;
                ++lowest;
            }
            out += " [label=\"" + std::to_string(lowest) + "\"]";
        }
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace dicut

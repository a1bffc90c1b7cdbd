#include "dicut/instances.hpp"

#include <random>
#include <stdexcept>

namespace dicut {

Digraph complete_digraph(int n) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be nonnegative");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Digraph(n, edges);
}

Digraph circulant_tournament7() {
    std::vector<Edge> edges;
    for (int i = 0; i < 7; ++i) {
        for (int step = 1; step <= 3; ++step) {
            edges.emplace_back(i, (i + step) % 7);
        }
    }
    return Digraph(7, edges);
}

int DStarLabels::id_of(const std::string& name) const {
    for (const auto& [n, id] : entries) {
        if (n == name) {
            return id;
        }
    }
    throw std::out_of_range("unknown label " + name);
}

std::pair<Digraph, DStarLabels> build_dstar() {
    DStarLabels labels;
    for (int i = 1; i <= 7; ++i) {
        labels.entries.emplace_back("x" + std::to_string(i), i - 1);
    }
    for (int i = 1; i <= 7; ++i) {
        labels.entries.emplace_back("y" + std::to_string(i), 7 + i - 1);
    }
    std::vector<Edge> edges;
    auto add_tournament = [&edges](int base) {
        for (int i = 0; i < 7; ++i) {
            for (int step = 1; step <= 3; ++step) {
                edges.emplace_back(base + i, base + (i + step) % 7);
            }
        }
    };
    add_tournament(0);  // x block
    add_tournament(7);  // y block

    int z = 14;
    for (int i = 1; i <= 7; ++i) {
        for (int j = i + 1; j <= 7; ++j) {
            for (int k = j + 1; k <= 7; ++k) {
                labels.entries.emplace_back(
                    "z_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k), z);
                edges.emplace_back(i - 1, z);
                edges.emplace_back(j - 1, z);
                edges.emplace_back(k - 1, z);
                ++z;
            }
        }
    }
    for (int u = 0; u < 49; ++u) {
        if (u >= 7 && u < 14) {
            continue;  // y vertices have no edges into the y block beyond their tournament
        }
        for (int y = 7; y < 14; ++y) {
            edges.emplace_back(u, y);
        }
    }
    return {Digraph(49, edges), std::move(labels)};
}

std::string serialize_labels(const DStarLabels& labels) {
    std::string out;
    for (const auto& [name, id] : labels.entries) {
        out += name + " " + std::to_string(id) + "\n";
    }
    return out;
}

Digraph random_dkl(int nx, int ny, int k, int l, double density, std::uint64_t seed) {
    if (nx < 0 || ny < 0 || k < 0 || l < 0) {
        throw std::invalid_argument("random_dkl parameters must be nonnegative");
    }
    if (!(density >= 0.0 && density <= 1.0)) {
        throw std::invalid_argument("density must be in [0,1]");
    }
    const int n = nx + ny;
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    const double threshold = density * 4294967296.0;
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) {
                continue;
            }
            bool sampled = static_cast<double>(rng()) < threshold;
            if (!sampled) {
                continue;
            }
            if (v < nx && indeg[v] + 1 > k) {
                continue;
            }
            if (u >= nx && outdeg[u] + 1 > l) {
                continue;
            }
            edges.emplace_back(u, v);
            ++outdeg[u];
            ++indeg[v];
        }
    }
    return Digraph(n, edges);
}

}  // namespace dicut

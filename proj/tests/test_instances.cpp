#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dicut/digraph.hpp"
#include "dicut/instances.hpp"

using namespace dicut;

TEST_CASE("complete_digraph") {
    CHECK(complete_digraph(0).vertex_count() == 0);
    Digraph k2 = complete_digraph(2);
    CHECK(k2.edge_count() == 2);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.has_edge(1, 0));
    Digraph k7 = complete_digraph(7);
    CHECK(k7.edge_count() == 42);
    for (int u = 0; u < 7; ++u) {
        for (int v = 0; v < 7; ++v) {
            CHECK(k7.has_edge(u, v) == (u != v));
        }
    }
}

TEST_CASE("circulant_tournament7") {
    Digraph d1 = circulant_tournament7();
    CHECK(d1.vertex_count() == 7);
    CHECK(d1.edge_count() == 21);
    CHECK(d1.has_edge(0, 3));        // x1 -> x4
    CHECK_FALSE(d1.has_edge(0, 4));  // x1 -> x5 is absent
    CHECK(d1.has_edge(4, 0));
    for (int v = 0; v < 7; ++v) {
        CHECK(d1.in_degree(v) == 3);
        CHECK(d1.out_degree(v) == 3);
    }
    for (int u = 0; u < 7; ++u) {
        for (int v = u + 1; v < 7; ++v) {
            CHECK(d1.has_edge(u, v) != d1.has_edge(v, u));
        }
    }
}

TEST_CASE("build_dstar structure") {
    auto [d, labels] = build_dstar();
    CHECK(d.vertex_count() == 49);
    CHECK(d.edge_count() == 441);
    for (int x = 0; x < 7; ++x) {
        CHECK(d.in_degree(x) == 3);
        CHECK(d.out_degree(x) == 25);
    }
    for (int y = 7; y < 14; ++y) {
        CHECK(d.in_degree(y) == 45);
        CHECK(d.out_degree(y) == 3);
    }
    for (int z = 14; z < 49; ++z) {
        CHECK(d.in_degree(z) == 3);
        CHECK(d.out_degree(z) == 7);
    }
    CHECK(find_bipartition(d, 3, 3).is_member());
}

TEST_CASE("dstar labels") {
    auto [d, labels] = build_dstar();
    CHECK(labels.entries.size() == 49);
    CHECK(labels.id_of("x1") == 0);
    CHECK(labels.id_of("x7") == 6);
    CHECK(labels.id_of("y1") == 7);
    CHECK(labels.id_of("z_1_2_3") == 14);
    CHECK(labels.id_of("z_5_6_7") == 48);
    CHECK_THROWS_AS(labels.id_of("w9"), std::out_of_range);

    std::set<int> ids;
    for (const auto& [name, id] : labels.entries) {
        ids.insert(id);
    }
    CHECK(ids.size() == 49);
    CHECK(*ids.begin() == 0);
    CHECK(*ids.rbegin() == 48);

    std::string text = serialize_labels(labels);
    CHECK(text.find("x1 0\n") == 0);
    CHECK(text.find("z_1_2_3 14\n") != std::string::npos);

    // z vertices sit below exactly their three subset members.
    int z123 = labels.id_of("z_1_2_3");
    CHECK(d.has_edge(labels.id_of("x1"), z123));
    CHECK(d.has_edge(labels.id_of("x2"), z123));
    CHECK(d.has_edge(labels.id_of("x3"), z123));
    CHECK_FALSE(d.has_edge(labels.id_of("x4"), z123));
}

TEST_CASE("random_dkl determinism and membership") {
    Digraph a = random_dkl(10, 10, 4, 4, 0.4, 7);
    Digraph b = random_dkl(10, 10, 4, 4, 0.4, 7);
    CHECK(serialize_edge_list(a) == serialize_edge_list(b));

    Digraph c = random_dkl(10, 10, 4, 4, 0.4, 8);
    CHECK(serialize_edge_list(a) != serialize_edge_list(c));

    CHECK(random_dkl(0, 0, 3, 3, 0.9, 1).vertex_count() == 0);
    CHECK(random_dkl(6, 6, 2, 2, 0.0, 1).edge_count() == 0);

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int nx = static_cast<int>(seed % 13);
        int ny = static_cast<int>((3 * seed) % 11);
        int k = static_cast<int>(seed % 5);
        int l = static_cast<int>((seed + 2) % 5);
        Digraph d = random_dkl(nx, ny, k, l, 0.1 + 0.02 * static_cast<double>(seed % 30), seed);
        CHECK(find_bipartition(d, k, l).is_member());
        for (int v = 0; v < nx; ++v) {
            CHECK(d.in_degree(v) <= k);
        }
        for (int v = nx; v < nx + ny; ++v) {
            CHECK(d.out_degree(v) <= l);
        }
    }

    CHECK_THROWS_AS(random_dkl(3, 3, 1, 1, 1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_dkl(-1, 3, 1, 1, 0.5, 0), std::invalid_argument);
}

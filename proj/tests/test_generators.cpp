#include <doctest.h>

#include <algorithm>
#include <set>

#include "mpinv/generators.hpp"

#include "fixtures.hpp"

using namespace mpinv;

TEST_CASE("splitmix64 streams are deterministic and below() stays in range") {
    SplitMix64 a(1234);
    SplitMix64 b(1234);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

    SplitMix64 c(99);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t v = c.below(17);
        CHECK(v < 17);
    }
    CHECK(SplitMix64(7).next() != SplitMix64(8).next());
    CHECK(SplitMix64(7).below(1) == 0);
}

TEST_CASE("decode_pruefer rebuilds the classic example") {
    // Code (4,4,4,5) on six vertices: star-ish tree where 4 collects 1,2,3.
    const Graph g = decode_pruefer({4, 4, 4, 5}, 6);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(g.find_edge(1, 4) != 0);
    CHECK(g.find_edge(2, 4) != 0);
    CHECK(g.find_edge(3, 4) != 0);
    CHECK(g.find_edge(4, 5) != 0);
    CHECK(g.find_edge(5, 6) != 0);

    CHECK(decode_pruefer({}, 2).edge_count() == 1);
    CHECK(decode_pruefer({}, 1).edge_count() == 0);
    CHECK_THROWS_AS(decode_pruefer({1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(decode_pruefer({0, 3}, 4), std::invalid_argument);
    CHECK_THROWS_AS(decode_pruefer({5, 3}, 4), std::invalid_argument);
}

TEST_CASE("enumerate_trees hits the Cayley counts and yields distinct trees") {
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(2).size() == 1);
    CHECK(enumerate_trees(3).size() == 3);
    CHECK(enumerate_trees(4).size() == 16);
    CHECK(enumerate_trees(5).size() == 125);
    CHECK(enumerate_trees(6).size() == 1296);
    CHECK_THROWS_AS(enumerate_trees(9), std::invalid_argument);

    std::set<std::vector<std::pair<int, int>>> seen;
    for (const Graph& g : enumerate_trees(4)) {
        CHECK(classify(g).kind == GraphKind::Tree);
        std::vector<std::pair<int, int>> key;
        for (const Edge& e : g.edges()) key.emplace_back(e.u, e.v);
        std::sort(key.begin(), key.end());
        seen.insert(key);
    }
    // Distinct codes decode to distinct labelled trees.
    CHECK(seen.size() == 16);
}

TEST_CASE("random_tree is seed-deterministic and always a tree") {
    for (int n = 1; n <= 12; ++n) {
        const Graph g = random_tree(n, 42);
        const Graph h = random_tree(n, 42);
        CHECK(g.edges() == h.edges());
        CHECK(classify(g).kind == GraphKind::Tree);
    }
    const Graph a = random_tree(9, 1);
    const Graph b = random_tree(9, 2);
    CHECK(a.edges() != b.edges());
}

TEST_CASE("random_odd_unicyclic honours n, the cycle length, and the seed") {
    for (int trial = 0; trial < 10; ++trial) {
        SplitMix64 rng(880 + static_cast<std::uint64_t>(trial));
        const int cycle_len = 3 + 2 * static_cast<int>(rng.below(3));
        const int n = cycle_len + static_cast<int>(rng.below(8));
        const std::uint64_t seed = rng.next();

        const Graph g = random_odd_unicyclic(n, cycle_len, seed);
        const Graph h = random_odd_unicyclic(n, cycle_len, seed);
        CHECK(g.edges() == h.edges());
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == n);
        CHECK(classify(g).kind == GraphKind::OddUnicyclic);
        CHECK(static_cast<int>(find_cycle(g).vertices.size()) == cycle_len);
    }
    CHECK_THROWS_AS(random_odd_unicyclic(5, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_odd_unicyclic(3, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_odd_unicyclic(2, 3, 0), std::invalid_argument);
}

TEST_CASE("random_connected_graph adds exactly the requested extra edges") {
    for (int trial = 0; trial < 10; ++trial) {
        SplitMix64 rng(9100 + static_cast<std::uint64_t>(trial));
        const int n = 2 + static_cast<int>(rng.below(9));
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_extra) + 1));

        const Graph g = random_connected_graph(n, extra, rng.next());
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == n - 1 + extra);
        CHECK(distances_from(g, 1).size() == static_cast<std::size_t>(n));
    }
    CHECK_THROWS_AS(random_connected_graph(4, 4, 0), std::invalid_argument);
}

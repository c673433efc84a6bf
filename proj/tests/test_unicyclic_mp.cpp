#include <doctest.h>

#include "mpinv/generators.hpp"
#include "mpinv/linalg.hpp"
#include "mpinv/unicyclic_mp.hpp"

#include "fixtures.hpp"

using namespace mpinv;

TEST_CASE("off_cycle_split cuts bridges and passes cycle edges through") {
    const Graph u = fixtures::odd_unicyclic7();
    const OffCycleSplit bridge = off_cycle_split(u, 1);  // e1 = {1,5}
    CHECK(bridge.with_cycle == std::vector<int>{1, 3, 4, 6});
    CHECK(bridge.without_cycle == std::vector<int>{2, 5, 7});

    const OffCycleSplit on = off_cycle_split(u, 4);  // e4 = {1,3} on the cycle
    CHECK(on.with_cycle == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
    CHECK(on.without_cycle.empty());

    CHECK_THROWS_AS(off_cycle_split(fixtures::asymmetric_tree7(), 1), wrong_class_error);
}

TEST_CASE("cycle_edge_pair_split finds the component with the shorter arc") {
    const Graph u = fixtures::odd_unicyclic7();
    CHECK(cycle_edge_pair_split(u, 4, 5).between == std::vector<int>{3});
    CHECK(cycle_edge_pair_split(u, 4, 7).between == std::vector<int>{1, 2, 5, 7});
    CHECK(cycle_edge_pair_split(u, 5, 7).between == std::vector<int>{4, 6});

    CHECK_THROWS_AS(cycle_edge_pair_split(u, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(cycle_edge_pair_split(u, 1, 4), std::invalid_argument);
}

TEST_CASE("inv_incidence reproduces the reference matrix") {
    const RationalMatrix a = inv_incidence(fixtures::odd_unicyclic7());
    CHECK(a == fixtures::uni7_inv_incidence());
    CHECK(a.row_kind() == IndexKind::Edge);
    CHECK(a.col_kind() == IndexKind::Vertex);
    CHECK_THROWS_AS(inv_incidence(fixtures::asymmetric_tree7()), wrong_class_error);
}

TEST_CASE("inv_signless_laplacian and inv_edge_laplacian reproduce the references") {
    const Graph u = fixtures::odd_unicyclic7();
    CHECK(inv_signless_laplacian(u) == fixtures::uni7_inv_q());
    CHECK(inv_edge_laplacian(u) == fixtures::uni7_inv_s());
}

TEST_CASE("closed-form inverses really invert") {
    const Graph u = fixtures::odd_unicyclic7();
    CHECK(unicyclic_mm_plus_check(u));
    const RationalMatrix inc = incidence_matrix(u);
    const RationalMatrix eye = RationalMatrix::identity(7);
    CHECK(matmul(inv_signless_laplacian(u), matmul(inc, inc.transposed())) == eye);
    CHECK(matmul(inv_edge_laplacian(u), matmul(inc.transposed(), inc)) == eye);
}

TEST_CASE("diagnostics recover the cycle and pendants from the inverses") {
    const Graph u = fixtures::odd_unicyclic7();
    const CycleDiagnostics diag =
        cycle_diagnostics(u, inv_signless_laplacian(u), inv_edge_laplacian(u));
    CHECK(diag.cycle_vertices == std::vector<int>{1, 3, 6});
    CHECK(diag.cycle_edges == std::vector<int>{4, 5, 7});
    // Pendant edges: e2={4,6}, e3={5,7}, e6={2,5} hang leaves 4, 7, 2.
    CHECK(diag.pendant_edges == std::vector<int>{2, 3, 6});

    CHECK_THROWS_AS(cycle_diagnostics(u, RationalMatrix(3, 3), inv_edge_laplacian(u)),
                    dimension_error);
}

TEST_CASE("diagnostics stay exact at n = 4 where the S diagonal is ambiguous") {
    // Triangle {1,2,3} plus the pendant edge {1,4}: every edge has S-inverse
    // diagonal 1 = n/4, so the endpoint filter has to do the work.
    const Graph g = build_graph(4, {{1, 4}, {1, 2}, {2, 3}, {1, 3}});
    const RationalMatrix s_inv = inv_edge_laplacian(g);
    for (int e = 1; e <= 4; ++e) CHECK(s_inv(e - 1, e - 1) == 1);
    const CycleDiagnostics diag =
        cycle_diagnostics(g, inv_signless_laplacian(g), s_inv);
    CHECK(diag.cycle_vertices == std::vector<int>{1, 2, 3});
    CHECK(diag.cycle_edges == std::vector<int>{2, 3, 4});
    CHECK(diag.pendant_edges == std::vector<int>{1});
}

TEST_CASE("closed forms match elimination on random instances") {
    const int cycles[] = {3, 5, 7};
    for (int trial = 0; trial < 20; ++trial) {
        SplitMix64 rng(5000 + static_cast<std::uint64_t>(trial));
        const int n = 3 + static_cast<int>(rng.below(12));
        int cycle_len = cycles[rng.below(3)];
        while (cycle_len > n) cycle_len -= 2;
        const Graph g = random_odd_unicyclic(n, cycle_len, rng.next());

        const RationalMatrix inc = incidence_matrix(g);
        const RationalMatrix a = inv_incidence(g);
        CHECK(a == inverse(inc));
        CHECK(inv_signless_laplacian(g) == inverse(matmul(inc, inc.transposed())));
        CHECK(inv_edge_laplacian(g) == inverse(matmul(inc.transposed(), inc)));
        CHECK(unicyclic_mm_plus_check(g));
    }
}

TEST_CASE("smallest case: the triangle") {
    const Graph tri = build_graph(3, {{1, 2}, {2, 3}, {1, 3}});
    const RationalMatrix a = inv_incidence(tri);
    CHECK(a == inverse(incidence_matrix(tri)));
    const RationalMatrix q_inv = inv_signless_laplacian(tri);
    CHECK(q_inv(0, 0) == make_rational(3, 4));
    const RationalMatrix s_inv = inv_edge_laplacian(tri);
    CHECK(s_inv(0, 0) == make_rational(3, 4));
    const CycleDiagnostics diag = cycle_diagnostics(tri, q_inv, s_inv);
    CHECK(diag.cycle_vertices == std::vector<int>{1, 2, 3});
    CHECK(diag.cycle_edges == std::vector<int>{1, 2, 3});
    CHECK(diag.pendant_edges.empty());
}

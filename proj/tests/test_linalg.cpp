#include <doctest.h>

#include "mpinv/generators.hpp"
#include "mpinv/linalg.hpp"

#include "fixtures.hpp"

using namespace mpinv;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const long long num = static_cast<long long>(rng.below(11)) - 5;
            const long long den = 1 + static_cast<long long>(rng.below(4));
            m(r, c) = make_rational(num, den);
        }
    return m;
}

}  // namespace

TEST_CASE("reduced row echelon form of a rank-2 matrix") {
    RationalMatrix a(3, 4);
    const long long data[3][4] = {{1, 2, 1, 1}, {2, 4, 0, 6}, {3, 6, 1, 7}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) a(r, c) = data[r][c];

    const RrefResult rref = reduced_row_echelon(a);
    CHECK(rref.pivot_columns == std::vector<std::size_t>{0, 2});
    CHECK(rank(a) == 2);
    // Leading entries are 1 and pivot columns are cleared elsewhere.
    CHECK(rref.matrix(0, 0) == 1);
    CHECK(rref.matrix(1, 2) == 1);
    CHECK(rref.matrix(0, 2) == 0);
    CHECK(rref.matrix(2, 0) == 0);
    CHECK(rref.matrix(0, 3) == 3);
    CHECK(rref.matrix(1, 3) == -2);
}

TEST_CASE("rank factorization reconstructs the matrix with full-rank factors") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 1 + rng.below(5);
        const std::size_t cols = 1 + rng.below(5);
        const std::size_t inner = 1 + rng.below(3);
        const RationalMatrix a =
            matmul(random_matrix(rows, inner, rng), random_matrix(inner, cols, rng));
        if (a.is_zero()) {
            CHECK_THROWS_AS(rank_factorization(a), matrix_error);
            continue;
        }
        const RankFactorization fg = rank_factorization(a);
        const std::size_t r = rank(a);
        CHECK(fg.full_column.cols() == r);
        CHECK(fg.full_row.rows() == r);
        CHECK(rank(fg.full_column) == r);
        CHECK(rank(fg.full_row) == r);
        CHECK(matmul(fg.full_column, fg.full_row) == a);
    }
}

TEST_CASE("inverse of a small matrix, singular and non-square rejection") {
    RationalMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 7;
    a(1, 1) = 4;
    const RationalMatrix inv = inverse(a);
    CHECK(inv(0, 0) == 4);
    CHECK(inv(0, 1) == -1);
    CHECK(inv(1, 0) == -7);
    CHECK(inv(1, 1) == 2);
    CHECK(matmul(a, inv) == RationalMatrix::identity(2));

    RationalMatrix sing(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) sing(r, c) = r + c;  // rank 2
    try {
        inverse(sing);
        FAIL("expected singular_error");
    } catch (const singular_error& e) {
        CHECK(e.rank == 2);
    }
    CHECK_THROWS_AS(inverse(RationalMatrix(2, 3)), dimension_error);
}

TEST_CASE("inverse of a square incidence matrix matches the pseudoinverse") {
    const RationalMatrix m = fixtures::uni7_incidence();
    CHECK(inverse(m) == fixtures::uni7_inv_incidence());
    CHECK(pseudoinverse_oracle(m) == fixtures::uni7_inv_incidence());
    CHECK(inverse(m).row_kind() == IndexKind::Edge);
    CHECK(inverse(m).col_kind() == IndexKind::Vertex);
}

TEST_CASE("pseudoinverse oracle reproduces the reference tree matrices") {
    CHECK(pseudoinverse_oracle(fixtures::tree7_incidence()) == fixtures::tree7_pinv_incidence());
    CHECK(pseudoinverse_oracle(fixtures::tree7_q()) == fixtures::tree7_pinv_q());
    CHECK(pseudoinverse_oracle(fixtures::tree7_s()) == fixtures::tree7_pinv_s());
}

TEST_CASE("pseudoinverse oracle handles degenerate shapes") {
    const RationalMatrix zero23(2, 3, IndexKind::Vertex, IndexKind::Edge);
    const RationalMatrix pinv = pseudoinverse_oracle(zero23);
    CHECK(pinv.rows() == 3);
    CHECK(pinv.cols() == 2);
    CHECK(pinv.is_zero());
    CHECK(pinv.row_kind() == IndexKind::Edge);
    CHECK(pinv.col_kind() == IndexKind::Vertex);

    const RationalMatrix empty = pseudoinverse_oracle(RationalMatrix(0, 1));
    CHECK(empty.rows() == 1);
    CHECK(empty.cols() == 0);

    RationalMatrix scalar(1, 1);
    scalar(0, 0) = make_rational(-3, 4);
    CHECK(pseudoinverse_oracle(scalar)(0, 0) == make_rational(-4, 3));
}

TEST_CASE("oracle output satisfies all four Penrose equations on random matrices") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 1 + rng.below(6);
        const std::size_t cols = 1 + rng.below(6);
        RationalMatrix a = random_matrix(rows, cols, rng);
        if (trial % 3 == 0) {
            // Force rank deficiency via an outer product.
            const std::size_t inner = 1 + rng.below(2);
            a = matmul(random_matrix(rows, inner, rng), random_matrix(inner, cols, rng));
        }
        const RationalMatrix x = pseudoinverse_oracle(a);
        CHECK(penrose_check(a, x).all_satisfied());
        // The pseudoinverse is an involution.
        CHECK(pseudoinverse_oracle(x) == a);
    }
}

TEST_CASE("full column rank gives a left inverse") {
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
        const RationalMatrix a = random_matrix(5, 2, rng);
        if (rank(a) != 2) continue;
        CHECK(matmul(pseudoinverse_oracle(a), a) == RationalMatrix::identity(2));
    }
}

TEST_CASE("penrose_check reports the first failing equation with coordinates") {
    const RationalMatrix a = fixtures::tree7_incidence();
    RationalMatrix x = fixtures::tree7_pinv_incidence();
    x(0, 0) += 1;
    const PenroseReport report = penrose_check(a, x);
    CHECK(!report.all_satisfied());
    REQUIRE(report.first_failure.has_value());
    CHECK(report.first_failure->equation == "AXA=A");

    CHECK_THROWS_AS(penrose_check(a, RationalMatrix(3, 3)), dimension_error);
}

TEST_CASE("the four Penrose equations pin down a unique matrix") {
    // Two candidates satisfying all four equations must agree; perturbing
    // any entry of the pseudoinverse breaks at least one equation.
    const RationalMatrix a = fixtures::uni7_q();
    const RationalMatrix x = pseudoinverse_oracle(a);
    CHECK(x == fixtures::uni7_inv_q());
    for (std::size_t r = 0; r < x.rows(); r += 3)
        for (std::size_t c = 0; c < x.cols(); c += 2) {
            RationalMatrix bad = x;
            bad(r, c) += make_rational(1, 5);
            CHECK(!penrose_check(a, bad).all_satisfied());
        }
}

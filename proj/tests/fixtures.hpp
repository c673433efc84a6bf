#pragma once

// Frozen reference data for the two worked examples used across the test
// suites: the 7-vertex tree with trivial automorphism group, and a triangle
// with four vertices hanging off it. All matrices were checked by hand
// against the closed-form definitions and the elimination oracle.

#include "mpinv/graph.hpp"
#include "mpinv/matrix.hpp"

#include <vector>

namespace fixtures {

using mpinv::IndexKind;

/// Matrix with every entry numerators[r][c] / denominator.
inline mpinv::RationalMatrix over(const std::vector<std::vector<long long>>& numerators,
                                  long long denominator, IndexKind row_kind,
                                  IndexKind col_kind) {
    const std::size_t rows = numerators.size();
    const std::size_t cols = rows == 0 ? 0 : numerators[0].size();
    mpinv::RationalMatrix m(rows, cols, row_kind, col_kind);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = mpinv::make_rational(numerators[r][c], denominator);
    return m;
}

// ---- asymmetric 7-vertex tree -------------------------------------------
// Edges in input order: e1={2,5} e2={1,7} e3={1,2} e4={4,5} e5={3,6} e6={1,3}

inline mpinv::Graph asymmetric_tree7() {
    return mpinv::build_graph(7, {{2, 5}, {1, 7}, {1, 2}, {4, 5}, {3, 6}, {1, 3}});
}

inline mpinv::RationalMatrix tree7_incidence() {
    return over(
        {
            {0, 1, 1, 0, 0, 1},
            {1, 0, 1, 0, 0, 0},
            {0, 0, 0, 0, 1, 1},
            {0, 0, 0, 1, 0, 0},
            {1, 0, 0, 1, 0, 0},
            {0, 0, 0, 0, 1, 0},
            {0, 1, 0, 0, 0, 0},
        },
        1, IndexKind::Vertex, IndexKind::Edge);
}

inline mpinv::RationalMatrix tree7_pinv_incidence() {
    return over(
        {
            {-2, 2, 2, -5, 5, -2, 2},
            {1, -1, -1, -1, 1, 1, 6},
            {3, 4, -3, 4, -4, 3, -3},
            {1, -1, -1, 6, 1, 1, -1},
            {-1, 1, 1, 1, -1, 6, 1},
            {2, -2, 5, -2, 2, -5, -2},
        },
        7, IndexKind::Edge, IndexKind::Vertex);
}

inline mpinv::RationalMatrix tree7_mm_plus() {
    return over(
        {
            {6, 1, 1, 1, -1, -1, 1},
            {1, 6, -1, -1, 1, 1, -1},
            {1, -1, 6, -1, 1, 1, -1},
            {1, -1, -1, 6, 1, 1, -1},
            {-1, 1, 1, 1, 6, -1, 1},
            {-1, 1, 1, 1, -1, 6, 1},
            {1, -1, -1, -1, 1, 1, 6},
        },
        7, IndexKind::Vertex, IndexKind::Vertex);
}

inline mpinv::RationalMatrix tree7_q() {
    return over(
        {
            {3, 1, 1, 0, 0, 0, 1},
            {1, 2, 0, 0, 1, 0, 0},
            {1, 0, 2, 0, 0, 1, 0},
            {0, 0, 0, 1, 1, 0, 0},
            {0, 1, 0, 1, 2, 0, 0},
            {0, 0, 1, 0, 0, 1, 0},
            {1, 0, 0, 0, 0, 0, 1},
        },
        1, IndexKind::Vertex, IndexKind::Vertex);
}

inline mpinv::RationalMatrix tree7_pinv_q() {
    return over(
        {
            {20, 1, -6, 22, -15, -1, -13},
            {1, 27, -15, 6, -13, 22, -8},
            {-6, -15, 41, -36, 29, -34, -1},
            {22, 6, -36, 83, -41, 43, -29},
            {-15, -13, 29, -41, 48, -36, 22},
            {-1, 22, -34, 43, -36, 76, 8},
            {-13, -8, -1, -29, 22, 8, 55},
        },
        49, IndexKind::Vertex, IndexKind::Vertex);
}

inline mpinv::RationalMatrix tree7_s() {
    return over(
        {
            {2, 0, 1, 1, 0, 0},
            {0, 2, 1, 0, 0, 1},
            {1, 1, 2, 0, 0, 1},
            {1, 0, 0, 2, 0, 0},
            {0, 0, 0, 0, 2, 1},
            {0, 1, 1, 0, 1, 2},
        },
        1, IndexKind::Edge, IndexKind::Edge);
}

inline mpinv::RationalMatrix tree7_pinv_s() {
    return over(
        {
            {10, 2, -8, -5, -2, 4},
            {2, 6, -3, -1, 1, -2},
            {-8, -3, 12, 4, 3, -6},
            {-5, -1, 4, 6, 1, -2},
            {-2, 1, 3, 1, 6, -5},
            {4, -2, -6, -2, -5, 10},
        },
        7, IndexKind::Edge, IndexKind::Edge);
}

// ---- odd unicyclic: triangle {1,3,6} with 2,4,5,7 hanging ----------------
// Edges in input order:
// e1={1,5} e2={4,6} e3={5,7} e4={1,3} e5={3,6} e6={2,5} e7={1,6}

inline mpinv::Graph odd_unicyclic7() {
    return mpinv::build_graph(7,
                              {{1, 5}, {4, 6}, {5, 7}, {1, 3}, {3, 6}, {2, 5}, {1, 6}});
}

inline mpinv::RationalMatrix uni7_incidence() {
    return over(
        {
            {1, 0, 0, 1, 0, 0, 1},
            {0, 0, 0, 0, 0, 1, 0},
            {0, 0, 0, 1, 1, 0, 0},
            {0, 1, 0, 0, 0, 0, 0},
            {1, 0, 1, 0, 0, 1, 0},
            {0, 1, 0, 0, 1, 0, 1},
            {0, 0, 1, 0, 0, 0, 0},
        },
        1, IndexKind::Vertex, IndexKind::Edge);
}

inline mpinv::RationalMatrix uni7_inv_incidence() {
    return over(
        {
            {0, -2, 0, 0, 2, 0, -2},
            {0, 0, 0, 2, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 2},
            {1, 1, 1, 1, -1, -1, 1},
            {-1, -1, 1, -1, 1, 1, -1},
            {0, 2, 0, 0, 0, 0, 0},
            {1, 1, -1, -1, -1, 1, 1},
        },
        2, IndexKind::Edge, IndexKind::Vertex);
}

inline mpinv::RationalMatrix uni7_q() {
    return over(
        {
            {3, 0, 1, 0, 1, 1, 0},
            {0, 1, 0, 0, 1, 0, 0},
            {1, 0, 2, 0, 0, 1, 0},
            {0, 0, 0, 1, 0, 1, 0},
            {1, 1, 0, 0, 3, 0, 1},
            {1, 0, 1, 1, 0, 3, 0},
            {0, 0, 0, 0, 1, 0, 1},
        },
        1, IndexKind::Vertex, IndexKind::Vertex);
}

inline mpinv::RationalMatrix uni7_inv_q() {
    return over(
        {
            {3, 3, -1, 1, -3, -1, 3},
            {3, 11, -1, 1, -7, -1, 7},
            {-1, -1, 3, 1, 1, -1, -1},
            {1, 1, 1, 7, -1, -3, 1},
            {-3, -7, 1, -1, 7, 1, -7},
            {-1, -1, -1, -3, 1, 3, -1},
            {3, 7, -1, 1, -7, -1, 11},
        },
        4, IndexKind::Vertex, IndexKind::Vertex);
}

inline mpinv::RationalMatrix uni7_s() {
    return over(
        {
            {2, 0, 1, 1, 0, 1, 1},
            {0, 2, 0, 0, 1, 0, 1},
            {1, 0, 2, 0, 0, 1, 0},
            {1, 0, 0, 2, 1, 0, 1},
            {0, 1, 0, 1, 2, 0, 1},
            {1, 0, 1, 0, 0, 2, 0},
            {1, 1, 0, 1, 1, 0, 2},
        },
        1, IndexKind::Edge, IndexKind::Edge);
}

inline mpinv::RationalMatrix uni7_inv_s() {
    return over(
        {
            {12, 0, -4, -6, 6, -4, -6},
            {0, 4, 0, 2, -2, 0, -2},
            {-4, 0, 4, 2, -2, 0, 2},
            {-6, 2, 2, 7, -5, 2, 1},
            {6, -2, -2, -5, 7, -2, -3},
            {-4, 0, 0, 2, -2, 4, 2},
            {-6, -2, 2, 1, -3, 2, 7},
        },
        4, IndexKind::Edge, IndexKind::Edge);
}

}  // namespace fixtures

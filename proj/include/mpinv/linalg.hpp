#pragma once

#include "mpinv/matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mpinv {

struct RrefResult {
    RationalMatrix matrix;                  // row kind cleared: row ops destroy row indexing
    std::vector<std::size_t> pivot_columns; // ascending; rank == pivot_columns.size()
};

/// Gauss-Jordan reduced row echelon form. Pivot choice is deterministic:
/// first row with a nonzero entry, in column order.
RrefResult reduced_row_echelon(RationalMatrix a);

std::size_t rank(const RationalMatrix& a);

/// A = full_column * full_row with both factors of full rank r = rank(A).
/// full_column keeps A's pivot columns, full_row keeps the nonzero RREF rows.
struct RankFactorization {
    RationalMatrix full_column;  // rows(A) x r
    RationalMatrix full_row;     // r x cols(A)
};

/// Throws matrix_error for an all-zero (or empty) matrix; the pseudoinverse
/// oracle short-circuits that case before calling this.
RankFactorization rank_factorization(const RationalMatrix& a);

/// Exact inverse of a square matrix via Gauss-Jordan elimination on [A | I].
/// Throws singular_error (carrying the rank) when not invertible.
RationalMatrix inverse(const RationalMatrix& a);

/// Exact Moore-Penrose inverse of any rational matrix, computed from a rank
/// factorization A = FG as A+ = G' (G G')^-1 (F' F)^-1 F'. A zero matrix maps
/// to the zero matrix of transposed shape. Independent of the closed-form
/// routines; used to cross-check them.
RationalMatrix pseudoinverse_oracle(const RationalMatrix& a);

/// Outcome of checking the four Penrose equations for a candidate X against A.
struct PenroseReport {
    bool axa_equals_a = false;   // A X A = A
    bool xax_equals_x = false;   // X A X = X
    bool ax_symmetric = false;   // (A X)' = A X
    bool xa_symmetric = false;   // (X A)' = X A

    struct Failure {
        std::string equation;
        std::size_t row = 0;     // 0-based coordinates of the first bad entry
        std::size_t col = 0;
    };
    std::optional<Failure> first_failure;

    bool all_satisfied() const {
        return axa_equals_a && xax_equals_x && ax_symmetric && xa_symmetric;
    }
};

/// Requires X shaped cols(A) x rows(A); throws dimension_error otherwise.
PenroseReport penrose_check(const RationalMatrix& a, const RationalMatrix& x);

}  // namespace mpinv

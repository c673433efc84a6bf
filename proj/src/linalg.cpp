#include "mpinv/linalg.hpp"

namespace mpinv {

RrefResult reduced_row_echelon(RationalMatrix a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    a.set_kinds(IndexKind::None, a.col_kind());
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
        std::size_t p = next_row;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(p, next_row);
        const Rational inv_pivot = Rational(1) / a(next_row, c);
        for (std::size_t j = c; j < cols; ++j) a(next_row, j) *= inv_pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row || a(r, c) == 0) continue;
            const Rational factor = a(r, c);
            for (std::size_t j = c; j < cols; ++j) a(r, j) -= factor * a(next_row, j);
        }
        pivots.push_back(c);
        ++next_row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& a) {
    return reduced_row_echelon(a).pivot_columns.size();
}

RankFactorization rank_factorization(const RationalMatrix& a) {
    if (a.is_zero())
        throw matrix_error("rank_factorization: zero matrix has no full-rank factors");
    RrefResult rref = reduced_row_echelon(a);
    const std::size_t r = rref.pivot_columns.size();
    RationalMatrix f(a.rows(), r, a.row_kind(), IndexKind::None);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) f(i, k) = a(i, rref.pivot_columns[k]);
    RationalMatrix g(r, a.cols(), IndexKind::None, a.col_kind());
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) g(k, j) = rref.matrix(k, j);
    return {std::move(f), std::move(g)};
}

RationalMatrix inverse(const RationalMatrix& a) {
    if (!a.is_square())
        throw dimension_error("inverse: matrix is " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()));
    const std::size_t n = a.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    RrefResult rref = reduced_row_echelon(std::move(aug));
    std::size_t left_rank = 0;
    for (std::size_t p : rref.pivot_columns)
        if (p < n) ++left_rank;
    if (left_rank < n) throw singular_error(left_rank, n);
    RationalMatrix inv(n, n, a.col_kind(), a.row_kind());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = rref.matrix(r, n + c);
    return inv;
}

RationalMatrix pseudoinverse_oracle(const RationalMatrix& a) {
    if (a.is_zero())
        return RationalMatrix(a.cols(), a.rows(), a.col_kind(), a.row_kind());
    RankFactorization fg = rank_factorization(a);
    const RationalMatrix ft = fg.full_column.transposed();
    const RationalMatrix gt = fg.full_row.transposed();
    const RationalMatrix left = inverse(matmul(fg.full_row, gt));   // (G G')^-1
    const RationalMatrix right = inverse(matmul(ft, fg.full_column)); // (F' F)^-1
    return matmul(matmul(gt, left), matmul(right, ft));
}

PenroseReport penrose_check(const RationalMatrix& a, const RationalMatrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw dimension_error("penrose_check: candidate must be shaped cols(A) x rows(A)");
    const RationalMatrix ax = matmul(a, x);
    const RationalMatrix xa = matmul(x, a);

    PenroseReport report;
    auto note = [&report](const char* equation, const RationalMatrix& got,
                          const RationalMatrix& want) {
        auto diff = first_difference(got, want);
        if (diff && !report.first_failure)
            report.first_failure = PenroseReport::Failure{equation, diff->first, diff->second};
        return !diff.has_value();
    };
    report.axa_equals_a = note("AXA=A", matmul(ax, a), a);
    report.xax_equals_x = note("XAX=X", matmul(xa, x), x);
    report.ax_symmetric = note("(AX)'=AX", ax, ax.transposed());
    report.xa_symmetric = note("(XA)'=XA", xa, xa.transposed());
    return report;
}

}  // namespace mpinv

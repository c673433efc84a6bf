#pragma once

#include "mpinv/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpinv {

/// What a matrix axis is indexed by. None acts as a wildcard: it is
/// compatible with any kind when multiplying.
enum class IndexKind { None, Vertex, Edge };

const char* index_kind_name(IndexKind kind);                 // "none" / "vertices" / "edges"
std::optional<IndexKind> index_kind_from_name(std::string_view name);

struct matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : matrix_error {
    using matrix_error::matrix_error;
};

struct kind_error : matrix_error {
    using matrix_error::matrix_error;
};

/// Thrown when an exact inverse is requested for a singular matrix.
struct singular_error : matrix_error {
    singular_error(std::size_t rank_, std::size_t size_)
        : matrix_error("matrix is singular: rank " + std::to_string(rank_) + " of " +
                       std::to_string(size_)),
          rank(rank_) {}
    std::size_t rank;
};

/// Dense matrix of exact rationals, row-major. Rows and columns carry an
/// IndexKind tag so vertex- and edge-indexed axes cannot be mixed up in
/// products. Equality compares shape and entries only; tags are metadata.
class RationalMatrix {
public:
    RationalMatrix() = default;  // 0x0

    RationalMatrix(std::size_t rows, std::size_t cols, IndexKind row_kind = IndexKind::None,
                   IndexKind col_kind = IndexKind::None)
        : rows_(rows), cols_(cols), row_kind_(row_kind), col_kind_(col_kind),
          entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n, IndexKind kind = IndexKind::None);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    IndexKind row_kind() const { return row_kind_; }
    IndexKind col_kind() const { return col_kind_; }
    void set_kinds(IndexKind row_kind, IndexKind col_kind) {
        row_kind_ = row_kind;
        col_kind_ = col_kind;
    }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    /// Bounds-checked access.
    Rational& at(std::size_t r, std::size_t c);
    const Rational& at(std::size_t r, std::size_t c) const;

    /// Transpose; the index-kind tags swap with the axes.
    RationalMatrix transposed() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    void swap_rows(std::size_t a, std::size_t b);

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);
    RationalMatrix& operator*=(const Rational& scalar);

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) {
        return !(a == b);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IndexKind row_kind_ = IndexKind::None;
    IndexKind col_kind_ = IndexKind::None;
    std::vector<Rational> entries_;
};

/// Exact product. Requires a.cols() == b.rows() and compatible inner kinds
/// (equal, or at least one None). The result is tagged (a.row_kind, b.col_kind).
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    return matmul(a, b);
}
RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& scalar, RationalMatrix m);

/// Coordinates (row, col) of the first entry where a and b differ, scanning
/// row-major; nullopt when equal. Shapes must match.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RationalMatrix& a,
                                                                    const RationalMatrix& b);

}  // namespace mpinv

#include "mpinv/matrix.hpp"

#include <algorithm>

namespace mpinv {

const char* index_kind_name(IndexKind kind) {
    switch (kind) {
        case IndexKind::Vertex: return "vertices";
        case IndexKind::Edge: return "edges";
        default: return "none";
    }
}

std::optional<IndexKind> index_kind_from_name(std::string_view name) {
    if (name == "vertices") return IndexKind::Vertex;
    if (name == "edges") return IndexKind::Edge;
    if (name == "none") return IndexKind::None;
    return std::nullopt;
}

RationalMatrix RationalMatrix::identity(std::size_t n, IndexKind kind) {
    RationalMatrix m(n, n, kind, kind);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

namespace {

std::string shape_string(const RationalMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Rational& RationalMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw dimension_error("entry (" + std::to_string(r) + "," + std::to_string(c) +
                              ") out of range for " + shape_string(*this) + " matrix");
    return (*this)(r, c);
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
    return const_cast<RationalMatrix*>(this)->at(r, c);
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_, col_kind_, row_kind_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& e) { return e == 0; });
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error(std::string(op) + ": shape mismatch " + shape_string(a) +
                              " vs " + shape_string(b));
}

bool kinds_compatible(IndexKind a, IndexKind b) {
    return a == IndexKind::None || b == IndexKind::None || a == b;
}

}  // namespace

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("matmul: " + shape_string(a) + " times " + shape_string(b));
    if (!kinds_compatible(a.col_kind(), b.row_kind()))
        throw kind_error(std::string("matmul: inner axis indexed by ") +
                         index_kind_name(a.col_kind()) + " vs " +
                         index_kind_name(b.row_kind()));
    RationalMatrix out(a.rows(), b.cols(), a.row_kind(), b.col_kind());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& av = a(r, k);
            if (av == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) {
                const Rational& bv = b(k, c);
                if (bv != 0) out(r, c) += av * bv;
            }
        }
    return out;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
    a += b;
    return a;
}

RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
    a -= b;
    return a;
}

RationalMatrix operator*(const Rational& scalar, RationalMatrix m) {
    m *= scalar;
    return m;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RationalMatrix& a,
                                                                    const RationalMatrix& b) {
    require_same_shape(a, b, "first_difference");
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != b(r, c)) return std::make_pair(r, c);
    return std::nullopt;
}

}  // namespace mpinv

#include "rigidcert/matrix.hpp"

#include <string>

#include "rigidcert/errors.hpp"

namespace rigidcert {

RatMatrix::RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {
    if (rows > kMaxDim || cols > kMaxDim)
        throw ScaleExceededError("matrix scale exceeded: " + std::to_string(rows) + "x" +
                                 std::to_string(cols) + " (cap " + std::to_string(kMaxDim) + ")");
    data_.assign(rows * cols, Rational());
}

RatMatrix RatMatrix::identity(size_t n) {
    RatMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<VecQ>& rows) {
    const size_t r = rows.size();
    const size_t c = r == 0 ? 0 : rows[0].size();
    RatMatrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("from_rows: ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

VecQ RatMatrix::row(size_t r) const {
    VecQ out(cols_);
    for (size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
    return out;
}

VecQ RatMatrix::col(size_t c) const {
    VecQ out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::multiply(const RatMatrix& other) const {
    if (cols_ != other.rows_) throw Error("multiply: dimension mismatch");
    RatMatrix p(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < other.cols_; ++j)
                p.at(i, j) += at(i, k) * other.at(k, j);
        }
    return p;
}

VecQ RatMatrix::apply(const VecQ& v) const {
    if (v.size() != cols_) throw Error("apply: dimension mismatch");
    VecQ out(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

} // namespace rigidcert

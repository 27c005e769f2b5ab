#pragma once

#include <cstddef>
#include <vector>

#include "rigidcert/rational.hpp"

namespace rigidcert {

// Dense rational matrix, row major. Dimensions above kMaxDim on either axis are
// rejected with ScaleExceededError so runaway constructions fail loudly instead
// of grinding the exact arithmetic to a halt.
class RatMatrix {
public:
    static constexpr size_t kMaxDim = 200;

    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols);
    static RatMatrix identity(size_t n);
    static RatMatrix from_rows(const std::vector<VecQ>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    VecQ row(size_t r) const;
    VecQ col(size_t c) const;

    RatMatrix transpose() const;
    RatMatrix multiply(const RatMatrix& other) const;
    VecQ apply(const VecQ& v) const;   // this * v
    bool is_symmetric() const;
    bool is_zero() const;

    bool operator==(const RatMatrix& other) const;

private:
    size_t rows_, cols_;
    std::vector<Rational> data_;
};

} // namespace rigidcert

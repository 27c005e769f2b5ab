#include "rigidcert/reference.hpp"

#include <utility>

namespace rigidcert {
namespace reference {

namespace {

struct Rref {
    std::vector<VecQ> m;
    std::vector<size_t> pivot_cols;
};

Rref rref(const RatMatrix& in) {
    Rref r;
    const size_t rows = in.rows(), cols = in.cols();
    r.m.resize(rows);
    for (size_t i = 0; i < rows; ++i) r.m[i] = in.row(i);
    size_t prow = 0;
    for (size_t c = 0; c < cols && prow < rows; ++c) {
        size_t sel = rows;
        for (size_t i = prow; i < rows; ++i)
            if (!r.m[i][c].is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(r.m[prow], r.m[sel]);
        const Rational inv = Rational(1) / r.m[prow][c];
        for (size_t j = c; j < cols; ++j) r.m[prow][j] = r.m[prow][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == prow || r.m[i][c].is_zero()) continue;
            const Rational f = r.m[i][c];
            for (size_t j = c; j < cols; ++j) r.m[i][j] -= f * r.m[prow][j];
        }
        r.pivot_cols.push_back(c);
        ++prow;
    }
    return r;
}

} // namespace

size_t rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<VecQ> kernel_basis(const RatMatrix& m) {
    const size_t cols = m.cols();
    const Rref r = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<VecQ> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        VecQ v(cols);
        v[f] = Rational(1);
        for (size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.m[i][f];
        basis.push_back(canonical_direction(v));
    }
    return basis;
}

} // namespace reference
} // namespace rigidcert

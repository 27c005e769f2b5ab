#include "rigidcert/elimination.hpp"

#include <atomic>
#include <cstdint>
#include <utility>

#include "rigidcert/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rigidcert {

namespace {

// Integer matrix with the same row space (hence the same right kernel) as the
// input: each row is scaled by the lcm of its denominators.
std::vector<std::vector<mpz_class>> to_row_scaled_integers(const RatMatrix& m) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (size_t j = 0; j < m.cols(); ++j)
            z[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }
    return z;
}

mpz_class checked_exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw InternalError("fraction-free elimination: inexact division (this is a bug)");
    return q;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> m;
    std::vector<size_t> pivot_cols; // pivot of row i is at column pivot_cols[i]
};

// Fraction-free row echelon form. After step k every entry is a (k+1)-minor of
// the row-permuted input (Sylvester identity), so the division by the previous
// pivot is exact; this keeps entry growth polynomial instead of exponential.
Echelon bareiss_echelon(std::vector<std::vector<mpz_class>> a, size_t cols, ElimBackend backend) {
    Echelon e;
    const size_t rows = a.size();
    mpz_class prev = 1;
    size_t prow = 0;
    const bool parallel = backend == ElimBackend::Parallel;
    for (size_t c = 0; c < cols && prow < rows; ++c) {
        size_t sel = rows;
        for (size_t i = prow; i < rows; ++i)
            if (a[i][c] != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(a[prow], a[sel]);
        const mpz_class& piv = a[prow][c];
        std::atomic<bool> failed{false};
        const std::int64_t lo = static_cast<std::int64_t>(prow) + 1;
        const std::int64_t hi = static_cast<std::int64_t>(rows);
        const bool worth = parallel && (hi - lo) * static_cast<std::int64_t>(cols - c) > 2048;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (worth)
#endif
        for (std::int64_t i = lo; i < hi; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                auto& row = a[static_cast<size_t>(i)];
                const mpz_class f = row[c];
                row[c] = 0;
                if (f == 0) {
                    if (prev != 1)
                        for (size_t j = c + 1; j < cols; ++j)
                            if (row[j] != 0) row[j] = checked_exact_div(piv * row[j], prev);
                    if (prev == 1)
                        for (size_t j = c + 1; j < cols; ++j) row[j] *= piv;
                } else {
                    for (size_t j = c + 1; j < cols; ++j)
                        row[j] = checked_exact_div(piv * row[j] - f * a[prow][j], prev);
                }
            } catch (...) {
                failed.store(true, std::memory_order_relaxed);
            }
        }
        if (failed.load())
            throw InternalError("fraction-free elimination: inexact division (this is a bug)");
        prev = piv;
        e.pivot_cols.push_back(c);
        ++prow;
    }
    e.m = std::move(a);
    return e;
}

Echelon echelon_of(const RatMatrix& m, ElimBackend backend) {
    return bareiss_echelon(to_row_scaled_integers(m), m.cols(), backend);
}

} // namespace

ElimBackend default_backend() {
#ifdef _OPENMP
    return ElimBackend::Parallel;
#else
    return ElimBackend::Serial;
#endif
}

size_t rank(const RatMatrix& m, ElimBackend backend) {
    return echelon_of(m, backend).pivot_cols.size();
}

std::vector<VecQ> kernel_basis(const RatMatrix& m, ElimBackend backend) {
    const size_t cols = m.cols();
    const Echelon e = echelon_of(m, backend);
    const size_t r = e.pivot_cols.size();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<VecQ> basis;
    basis.reserve(cols - r);
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        VecQ v(cols);
        v[f] = Rational(1);
        for (size_t ii = r; ii-- > 0;) {
            const size_t pc = e.pivot_cols[ii];
            Rational acc;
            for (size_t j = pc + 1; j < cols; ++j) {
                if (e.m[ii][j] == 0 || v[j].is_zero()) continue;
                acc += Rational(e.m[ii][j], mpz_class(1)) * v[j];
            }
            if (!acc.is_zero()) v[pc] = -acc / Rational(e.m[ii][pc], mpz_class(1));
        }
        basis.push_back(canonical_direction(v));
    }
    return basis;
}

std::vector<VecQ> cokernel_basis(const RatMatrix& m, ElimBackend backend) {
    return kernel_basis(m.transpose(), backend);
}

RatMatrix gale_dual(const RatMatrix& p_hat) {
    const auto vecs = cokernel_basis(p_hat);
    RatMatrix g(p_hat.rows(), vecs.size());
    for (size_t j = 0; j < vecs.size(); ++j)
        for (size_t i = 0; i < p_hat.rows(); ++i) g.at(i, j) = vecs[j][i];
    return g;
}

} // namespace rigidcert

// Timing comparison of the elimination routes on rigidity-style matrices:
// plain rational Gauss-Jordan (reference), fraction-free serial, and
// fraction-free with OpenMP row updates. All three must agree on the rank.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "rigidcert/construct.hpp"
#include "rigidcert/elimination.hpp"
#include "rigidcert/matrix.hpp"
#include "rigidcert/reference.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rigidcert;

namespace {

RatMatrix random_matrix(RandomSource& rng, size_t rows, size_t cols, size_t def) {
    // Low-rank-deficient by construction: the last `def` rows are combinations
    // of earlier ones, so the kernel routines have something to find.
    RatMatrix m(rows, cols);
    for (size_t i = 0; i + def < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(rng.uniform(-50, 50), rng.uniform(1, 9));
    for (size_t i = rows - def; i < rows; ++i) {
        const size_t a = static_cast<size_t>(rng.uniform(0, static_cast<long>(rows - def) - 1));
        const size_t b = static_cast<size_t>(rng.uniform(0, static_cast<long>(rows - def) - 1));
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = m.at(a, j) + m.at(b, j);
    }
    return m;
}

template <typename F>
double time_ms(const F& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    size_t size = argc > 1 ? static_cast<size_t>(std::atoi(argv[1])) : 120;
    if (size == 0 || size > RatMatrix::kMaxDim) size = 120;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: not compiled in (Parallel backend falls back to serial code path)\n");
#endif
    std::printf("%8s %6s | %14s %14s %14s\n", "shape", "rank", "reference(ms)", "serial(ms)",
                "parallel(ms)");

    RandomSource rng(7);
    for (const size_t n : {size / 4, size / 2, size}) {
        if (n < 8) continue;
        const RatMatrix m = random_matrix(rng, n, n + n / 4 <= RatMatrix::kMaxDim ? n + n / 4 : n, n / 8 + 1);
        size_t r_ref = 0, r_ser = 0, r_par = 0;
        const double t_ref = time_ms([&] { r_ref = reference::rank(m); });
        const double t_ser = time_ms([&] { r_ser = rank(m, ElimBackend::Serial); });
        const double t_par = time_ms([&] { r_par = rank(m, ElimBackend::Parallel); });
        if (r_ref != r_ser || r_ser != r_par) {
            std::printf("RANK DISAGREEMENT: %zu %zu %zu\n", r_ref, r_ser, r_par);
            return 1;
        }
        std::printf("%4zux%-4zu %6zu | %14.2f %14.2f %14.2f\n", m.rows(), m.cols(), r_ser, t_ref,
                    t_ser, t_par);
    }
    return 0;
}

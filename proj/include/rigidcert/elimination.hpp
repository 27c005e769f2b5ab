#pragma once

#include <vector>

#include "rigidcert/matrix.hpp"

namespace rigidcert {

// Fraction-free (Bareiss) elimination over exact integers. Row updates within a
// pivot step are independent, so the Parallel backend distributes them across
// OpenMP threads; both backends produce bit-identical results.
enum class ElimBackend { Serial, Parallel };

ElimBackend default_backend();

size_t rank(const RatMatrix& m, ElimBackend backend = default_backend());

// Basis of the right kernel: m * v = 0 exactly for each v. Vectors are
// integral, gcd 1, first nonzero entry positive, ordered by free column.
std::vector<VecQ> kernel_basis(const RatMatrix& m, ElimBackend backend = default_backend());

// Basis of the left kernel: v^T * m = 0 exactly for each v.
std::vector<VecQ> cokernel_basis(const RatMatrix& m, ElimBackend backend = default_backend());

// For an n x k matrix P_hat, returns an n x (n - rank(P_hat)) matrix G with
// G^T * P_hat = 0 and rank(G) = n - rank(P_hat). Columns are the canonical
// left-kernel basis vectors.
RatMatrix gale_dual(const RatMatrix& p_hat);

} // namespace rigidcert

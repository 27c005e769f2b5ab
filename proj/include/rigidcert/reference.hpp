#pragma once

#include <vector>

#include "rigidcert/matrix.hpp"

namespace rigidcert {
namespace reference {

// Plain rational Gauss-Jordan, kept as an independent check on the
// fraction-free kernels. Deliberately naive; serial only.
size_t rank(const RatMatrix& m);
std::vector<VecQ> kernel_basis(const RatMatrix& m);

} // namespace reference
} // namespace rigidcert

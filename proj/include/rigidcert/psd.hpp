#pragma once

#include <optional>
#include <vector>

#include "rigidcert/matrix.hpp"

namespace rigidcert {

struct PsdReport {
    bool is_psd = false;
    size_t rank = 0;
    std::vector<size_t> pivot_permutation;
    VecQ pivot_values;
    std::optional<VecQ> failure_witness; // x with x^T S x < 0, verified exactly
    Rational witness_value;              // x^T S x when a witness is present
};

// Exact PSD decision by symmetric elimination with positive diagonal pivots.
// Sound because a PSD matrix stays PSD under Schur complements and a PSD
// matrix with a zero diagonal entry has a zero row; any failure is returned
// with an explicit vector whose quadratic form value is negative.
PsdReport psd_certify(const RatMatrix& s);

} // namespace rigidcert

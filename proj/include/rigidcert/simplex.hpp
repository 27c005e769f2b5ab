#pragma once

#include <vector>

#include "rigidcert/matrix.hpp"

namespace rigidcert {

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
    SimplexStatus status = SimplexStatus::Infeasible;
    Rational objective;
    VecQ x;
};

// Minimize c^T x subject to A x = b, x >= 0. Exact rational two-phase simplex
// with Bland's rule (lowest eligible index enters; ratio ties leave by lowest
// basic variable index), so the iteration is deterministic and cannot cycle.
SimplexResult simplex_min(const RatMatrix& a, const VecQ& b, const VecQ& c);

enum class LpStatus { Optimal, Infeasible };

struct LpWeightResult {
    LpStatus status = LpStatus::Infeasible;
    Rational t_star;
    VecQ solution; // the weight vector w
};

// Maximize t subject to A w = b, w_i >= t for all i, t >= 0. With convex
// combination rows in A this decides whether b is reachable with uniformly
// positive weights: t* > 0 strict interior, t* = 0 boundary only, infeasible
// when no nonnegative weights work at all. Unbounded cannot occur for
// well-formed inputs and is reported as an internal error.
LpWeightResult lp_max_min_weight(const RatMatrix& a, const VecQ& b);

} // namespace rigidcert

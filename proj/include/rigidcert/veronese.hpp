#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidcert/framework.hpp"
#include "rigidcert/matrix.hpp"

namespace rigidcert {

// V(x) = x_hat x_hat^T for x_hat = (x_1..x_d, 1): symmetric rank-1
// (d+1)x(d+1) matrix with bottom-right entry 1.
RatMatrix veronese(const VecQ& x);

// Trace inner product <X, Y> = sum_ij X_ij Y_ij; for symmetric Q this gives
// <V(x), Q> = x_hat^T Q x_hat.
Rational trace_inner(const RatMatrix& x, const RatMatrix& y);

// Affine dimension of {V(x)} inside the D-dimensional affine chart,
// D = C(d+2,2) - 1.
size_t veronese_affine_span_dim(const std::vector<VecQ>& points);

// Rows are the upper-triangle coordinates of V(x) per point; the constant
// bottom-right 1 doubles as the homogenizing coordinate.
RatMatrix veronese_config_matrix(const std::vector<VecQ>& points, size_t d);

struct ConicReport {
    bool conic_exists = false;
    size_t direction_veronese_rank = 0;
    size_t max_rank = 0;                   // C(d+1,2)
    std::optional<RatMatrix> witness_conic; // symmetric dxd Q != 0, e^T Q e = 0 on all edges
};

// A conic at infinity is a nonzero quadratic form vanishing on every edge
// direction; it exists iff the directions' homogeneous Veronese images do not
// span the full C(d+1,2)-dimensional space.
ConicReport conic_at_infinity(const Framework& f);

enum class HullStatus { RelativeInteriorIntersect, DisjointStrictlySeparable, BoundaryInconclusive };

std::string hull_status_name(HullStatus s);

struct HullIntersectionReport {
    HullStatus status = HullStatus::BoundaryInconclusive;
    Rational t_star;  // optimal min-weight for the interior LP (when feasible)
    VecQ weights_p;   // convex weights on p realizing the common point
    VecQ weights_q;
    // Symmetric (d+1)x(d+1) quadric with <V(p_i),Q> <= -1 and <V(q_j),Q> >= 1.
    std::optional<RatMatrix> separating_quadric;
};

// Exact convex-position oracle on the Veronese images: relative interiors
// intersect (t* > 0), hulls strictly separable by a quadric (with witness), or
// hulls touching only on their boundaries (reported honestly, no claim made).
HullIntersectionReport hull_relation(const std::vector<VecQ>& p, const std::vector<VecQ>& q,
                                     size_t d);

} // namespace rigidcert

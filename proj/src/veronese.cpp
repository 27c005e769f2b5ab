#include "rigidcert/veronese.hpp"

#include <utility>

#include "rigidcert/elimination.hpp"
#include "rigidcert/errors.hpp"
#include "rigidcert/simplex.hpp"

namespace rigidcert {

RatMatrix veronese(const VecQ& x) {
    const size_t d = x.size();
    VecQ xh = x;
    xh.push_back(Rational(1));
    RatMatrix v(d + 1, d + 1);
    for (size_t i = 0; i <= d; ++i)
        for (size_t j = 0; j <= d; ++j) v.at(i, j) = xh[i] * xh[j];
    return v;
}

Rational trace_inner(const RatMatrix& x, const RatMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw Error("trace_inner: shape mismatch");
    Rational acc;
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j)
            if (!x.at(i, j).is_zero() && !y.at(i, j).is_zero()) acc += x.at(i, j) * y.at(i, j);
    return acc;
}

RatMatrix veronese_config_matrix(const std::vector<VecQ>& points, size_t d) {
    const size_t cols = (d + 1) * (d + 2) / 2;
    RatMatrix m(points.size(), cols);
    for (size_t r = 0; r < points.size(); ++r) {
        if (points[r].size() != d) throw Error("veronese_config_matrix: dimension mismatch");
        const RatMatrix v = veronese(points[r]);
        size_t c = 0;
        for (size_t i = 0; i <= d; ++i)
            for (size_t j = i; j <= d; ++j) m.at(r, c++) = v.at(i, j);
    }
    return m;
}

size_t veronese_affine_span_dim(const std::vector<VecQ>& points) {
    if (points.empty()) throw HypothesisError("veronese_affine_span_dim: empty point set");
    // The constant 1 in the bottom-right coordinate homogenizes the rows, so
    // the affine dimension is the row rank minus one.
    return rank(veronese_config_matrix(points, points[0].size())) - 1;
}

ConicReport conic_at_infinity(const Framework& f) {
    if (f.graph.edges.empty()) throw HypothesisError("conic_at_infinity: framework has no edges");
    const size_t d = f.config.dimension;
    const std::vector<VecQ> dirs = edge_directions(f); // rejects zero-length edges
    const size_t cols = d * (d + 1) / 2;

    // Row per direction: upper-triangle coordinates of e e^T over x_i x_j.
    RatMatrix m(dirs.size(), cols);
    for (size_t r = 0; r < dirs.size(); ++r) {
        size_t c = 0;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i; j < d; ++j) m.at(r, c++) = dirs[r][i] * dirs[r][j];
    }

    ConicReport rep;
    rep.max_rank = cols;
    rep.direction_veronese_rank = rank(m);
    rep.conic_exists = rep.direction_veronese_rank < rep.max_rank;
    if (rep.conic_exists) {
        const auto kern = kernel_basis(m);
        if (kern.empty()) throw InternalError("conic_at_infinity: missing kernel (this is a bug)");
        // Kernel coefficients are over x_i x_j (i <= j); halve the off-diagonal
        // ones so Q acts as a symmetric form with e^T Q e = 0.
        const VecQ& k = kern.front();
        RatMatrix q(d, d);
        size_t c = 0;
        for (size_t i = 0; i < d; ++i)
            for (size_t j = i; j < d; ++j) {
                if (i == j) {
                    q.at(i, i) = k[c];
                } else {
                    q.at(i, j) = k[c] / Rational(2);
                    q.at(j, i) = q.at(i, j);
                }
                ++c;
            }
        for (const auto& e : dirs) {
            Rational val;
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    if (!q.at(i, j).is_zero()) val += e[i] * q.at(i, j) * e[j];
            if (!val.is_zero())
                throw InternalError("conic_at_infinity: witness fails on an edge (this is a bug)");
        }
        rep.witness_conic = std::move(q);
    }
    return rep;
}

std::string hull_status_name(HullStatus s) {
    switch (s) {
        case HullStatus::RelativeInteriorIntersect: return "RELATIVE_INTERIOR_INTERSECT";
        case HullStatus::DisjointStrictlySeparable: return "DISJOINT_STRICTLY_SEPARABLE";
        case HullStatus::BoundaryInconclusive: return "BOUNDARY_INCONCLUSIVE";
    }
    return "UNKNOWN";
}

namespace {

// Strict separation LP: find symmetric Q and offset c with <V(p_i),Q> <= c-1
// and <V(q_j),Q> >= c+1, margin normalized to 1 by the scaling freedom. The
// offset is absorbed into the bottom-right entry of the returned quadric so a
// single matrix witnesses the separation with <V(p_i),Q'> <= -1 < 1 <= <V(q_j),Q'>.
std::optional<RatMatrix> strict_separation(const std::vector<RatMatrix>& vp,
                                           const std::vector<RatMatrix>& vq, size_t d) {
    const size_t nq = (d + 1) * (d + 2) / 2; // upper-triangle unknowns of Q
    const size_t rows = vp.size() + vq.size();
    // Free variables (Q entries and c) split into +/- parts, one slack per row.
    const size_t nfree = nq + 1;
    const size_t cols = 2 * nfree + rows;
    RatMatrix a(rows, cols);
    VecQ b(rows);

    const auto fill = [&](size_t row, const RatMatrix& v, const Rational& sign) {
        size_t c = 0;
        for (size_t i = 0; i <= d; ++i)
            for (size_t j = i; j <= d; ++j) {
                // trace inner product counts off-diagonal entries twice
                const Rational coef = (i == j ? v.at(i, j) : Rational(2) * v.at(i, j)) * sign;
                a.at(row, c) = coef;
                a.at(row, nfree + c) = -coef;
                ++c;
            }
        a.at(row, c) = -sign;          // -c term (offset variable)
        a.at(row, nfree + c) = sign;
    };

    size_t row = 0;
    for (const auto& v : vp) { // <V,Q> - c + slack = -1
        fill(row, v, Rational(1));
        a.at(row, 2 * nfree + row) = Rational(1);
        b[row] = Rational(-1);
        ++row;
    }
    for (const auto& v : vq) { // <V,Q> - c - slack = 1
        fill(row, v, Rational(1));
        a.at(row, 2 * nfree + row) = Rational(-1);
        b[row] = Rational(1);
        ++row;
    }

    const SimplexResult res = simplex_min(a, b, VecQ(cols));
    if (res.status != SimplexStatus::Optimal) return std::nullopt;

    RatMatrix q(d + 1, d + 1);
    size_t c = 0;
    for (size_t i = 0; i <= d; ++i)
        for (size_t j = i; j <= d; ++j) {
            q.at(i, j) = res.x[c] - res.x[nfree + c];
            q.at(j, i) = q.at(i, j);
            ++c;
        }
    const Rational offset = res.x[c] - res.x[nfree + c];
    q.at(d, d) -= offset; // x_hat ends in 1, so the offset lives on the corner
    return q;
}

} // namespace

HullIntersectionReport hull_relation(const std::vector<VecQ>& p, const std::vector<VecQ>& q,
                                     size_t d) {
    if (p.empty() || q.empty()) throw HypothesisError("hull_relation: both parts must be nonempty");
    std::vector<RatMatrix> vp, vq;
    vp.reserve(p.size());
    vq.reserve(q.size());
    for (const auto& x : p) {
        if (x.size() != d) throw Error("hull_relation: point dimension mismatch");
        vp.push_back(veronese(x));
    }
    for (const auto& x : q) {
        if (x.size() != d) throw Error("hull_relation: point dimension mismatch");
        vq.push_back(veronese(x));
    }

    // Interior LP: equal Veronese barycenters with convex weights on each side,
    // maximizing the smallest weight.
    const size_t nentries = (d + 1) * (d + 2) / 2;
    const size_t nw = p.size() + q.size();
    RatMatrix a(nentries + 2, nw);
    VecQ b(nentries + 2);
    size_t row = 0;
    for (size_t i = 0; i <= d; ++i)
        for (size_t j = i; j <= d; ++j) {
            for (size_t k = 0; k < vp.size(); ++k) a.at(row, k) = vp[k].at(i, j);
            for (size_t k = 0; k < vq.size(); ++k) a.at(row, p.size() + k) = -vq[k].at(i, j);
            ++row;
        }
    for (size_t k = 0; k < p.size(); ++k) a.at(row, k) = Rational(1);
    b[row++] = Rational(1);
    for (size_t k = 0; k < q.size(); ++k) a.at(row, p.size() + k) = Rational(1);
    b[row] = Rational(1);

    const LpWeightResult lp = lp_max_min_weight(a, b);
    HullIntersectionReport rep;
    if (lp.status == LpStatus::Optimal) {
        rep.t_star = lp.t_star;
        rep.weights_p.assign(lp.solution.begin(),
                             lp.solution.begin() + static_cast<std::ptrdiff_t>(p.size()));
        rep.weights_q.assign(lp.solution.begin() + static_cast<std::ptrdiff_t>(p.size()),
                             lp.solution.end());
        if (lp.t_star > Rational(0)) {
            // Verify the common point exactly before claiming anything.
            RatMatrix lhs(d + 1, d + 1), rhs(d + 1, d + 1);
            for (size_t k = 0; k < vp.size(); ++k)
                for (size_t i = 0; i <= d; ++i)
                    for (size_t j = 0; j <= d; ++j)
                        lhs.at(i, j) += rep.weights_p[k] * vp[k].at(i, j);
            for (size_t k = 0; k < vq.size(); ++k)
                for (size_t i = 0; i <= d; ++i)
                    for (size_t j = 0; j <= d; ++j)
                        rhs.at(i, j) += rep.weights_q[k] * vq[k].at(i, j);
            if (!(lhs == rhs))
                throw InternalError("hull_relation: barycenter mismatch (this is a bug)");
            rep.status = HullStatus::RelativeInteriorIntersect;
        } else {
            rep.status = HullStatus::BoundaryInconclusive;
        }
        return rep;
    }

    // Hulls are disjoint; compact polytopes are then strictly separable, and
    // the separation LP must be feasible.
    auto quadric = strict_separation(vp, vq, d);
    if (!quadric)
        throw InternalError("hull_relation: disjoint hulls but no separating quadric (this is a bug)");
    for (const auto& v : vp)
        if (!(trace_inner(v, *quadric) <= Rational(-1)))
            throw InternalError("hull_relation: quadric fails on p side (this is a bug)");
    for (const auto& v : vq)
        if (!(trace_inner(v, *quadric) >= Rational(1)))
            throw InternalError("hull_relation: quadric fails on q side (this is a bug)");
    rep.status = HullStatus::DisjointStrictlySeparable;
    rep.separating_quadric = std::move(*quadric);
    return rep;
}

} // namespace rigidcert

#include "rigidcert/rigidity.hpp"

#include "rigidcert/elimination.hpp"
#include "rigidcert/errors.hpp"

namespace rigidcert {

size_t binom2(size_t k) { return k * (k - 1) / 2; }

RigidityMatrix rigidity_matrix(const Framework& f) {
    const size_t d = f.config.dimension, n = f.graph.vertex_count;
    const size_t m = f.graph.edges.size();
    RigidityMatrix r;
    r.dimension = d;
    r.vertex_count = n;
    r.edge_of_row = f.graph.edges;
    r.mat = RatMatrix(m, d * n);
    for (size_t e = 0; e < m; ++e) {
        const auto [i, j] = f.graph.edges[e];
        for (size_t k = 0; k < d; ++k) {
            const Rational diff = f.config.points[j][k] - f.config.points[i][k];
            r.mat.at(e, j * d + k) = diff;
            r.mat.at(e, i * d + k) = -diff;
        }
    }
    return r;
}

RankReport is_infinitesimally_rigid(const Framework& f) {
    const size_t d = f.config.dimension, n = f.graph.vertex_count;
    if (n < d) throw HypothesisError("is_infinitesimally_rigid: needs n >= d vertices");
    RankReport rep;
    rep.rank = rank(rigidity_matrix(f).mat);
    rep.expected = d * n - binom2(d + 1);
    rep.full_affine_span = affine_span_dim(f.config.points) == d;
    rep.rigid = rep.rank == rep.expected;
    return rep;
}

std::vector<StressVector> stress_basis(const Framework& f) {
    return cokernel_basis(rigidity_matrix(f).mat);
}

RatMatrix assemble_stress_matrix(const Framework& f, const StressVector& w) {
    const size_t n = f.graph.vertex_count;
    if (w.size() != f.graph.edges.size())
        throw Error("assemble_stress_matrix: stress length != edge count");

    const RigidityMatrix r = rigidity_matrix(f);
    VecQ residual(r.mat.cols());
    for (size_t e = 0; e < w.size(); ++e) {
        if (w[e].is_zero()) continue;
        for (size_t c = 0; c < r.mat.cols(); ++c)
            if (!r.mat.at(e, c).is_zero()) residual[c] += w[e] * r.mat.at(e, c);
    }
    if (!is_zero_vector(residual)) {
        std::string msg = "assemble_stress_matrix: not an equilibrium stress; residual (";
        for (size_t c = 0; c < residual.size(); ++c)
            msg += (c ? "," : "") + residual[c].to_string();
        throw Error(msg + ")");
    }

    RatMatrix omega(n, n);
    for (size_t e = 0; e < w.size(); ++e) {
        const auto [i, j] = f.graph.edges[e];
        omega.at(i, j) = -w[e];
        omega.at(j, i) = -w[e];
        omega.at(i, i) += w[e];
        omega.at(j, j) += w[e];
    }

    const RatMatrix p_hat = config_matrix(f);
    if (!omega.multiply(p_hat).is_zero())
        throw InternalError("assemble_stress_matrix: Omega * P_hat != 0 (this is a bug)");
    return omega;
}

MaxwellAudit maxwell_audit(const Framework& f) {
    const size_t d = f.config.dimension, n = f.graph.vertex_count;
    if (n < d) throw HypothesisError("maxwell_audit: needs n >= d vertices");
    const RigidityMatrix rm = rigidity_matrix(f);
    MaxwellAudit a;
    a.m_edges = f.graph.edges.size();
    a.d = d;
    a.r = rank(rm.mat);
    a.s = cokernel_basis(rm.mat).size();
    a.f = kernel_basis(rm.mat).size();
    a.trivial_motion_count = binom2(d + 1);
    const size_t dn = d * n;
    a.identity_holds = (a.s == a.m_edges - a.r) && (a.f == dn - a.r) &&
                       (a.s + dn == a.f + a.m_edges);
    // m - r = s - f + C(d+1,2), rearranged to avoid unsigned underflow
    a.rigid_count_holds = a.m_edges + a.f == a.s + a.trivial_motion_count + a.r;
    return a;
}

} // namespace rigidcert

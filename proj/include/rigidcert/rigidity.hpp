#pragma once

#include <vector>

#include "rigidcert/framework.hpp"
#include "rigidcert/matrix.hpp"

namespace rigidcert {

// Row per edge, d columns per vertex (column v*d + k is coordinate k of
// vertex v); the row of edge {i,j} (i<j) carries p(j)-p(i) on j's columns and
// the negation on i's columns.
struct RigidityMatrix {
    RatMatrix mat;
    std::vector<std::pair<size_t, size_t>> edge_of_row;
    size_t dimension = 0;
    size_t vertex_count = 0;
};

using StressVector = VecQ; // one entry per edge, aligned with graph.edges

struct RankReport {
    size_t rank = 0;
    size_t expected = 0; // d*n - C(d+1,2)
    bool full_affine_span = false;
    bool rigid = false; // rank == expected (which forces full span)
};

struct MaxwellAudit {
    size_t m_edges = 0;
    size_t r = 0; // rank of the rigidity matrix
    size_t s = 0; // dimension of the equilibrium stress space (cokernel)
    size_t f = 0; // dimension of the infinitesimal flex space (kernel)
    size_t d = 0;
    size_t trivial_motion_count = 0; // C(d+1,2)
    // The unconditional index identities: s = m - r, f = dn - r, s - f = m - dn.
    bool identity_holds = false;
    // The classical rigid-count form m - r = s - f + C(d+1,2); holds exactly
    // when the framework is infinitesimally rigid, reported for reference.
    bool rigid_count_holds = false;
};

RigidityMatrix rigidity_matrix(const Framework& f);

RankReport is_infinitesimally_rigid(const Framework& f);

// Basis of equilibrium stresses (left kernel of R); dimension m - rank(R).
std::vector<StressVector> stress_basis(const Framework& f);

// Omega_{ij} = Omega_{ji} = -w_{ij} on edges, Omega_{ii} = sum_j w_{ij};
// requires w to be an equilibrium stress and checks Omega*1 = Omega*P_hat = 0.
RatMatrix assemble_stress_matrix(const Framework& f, const StressVector& w);

MaxwellAudit maxwell_audit(const Framework& f);

size_t binom2(size_t k); // C(k, 2)

} // namespace rigidcert

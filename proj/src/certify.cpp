#include "rigidcert/certify.hpp"

#include <utility>

#include "rigidcert/elimination.hpp"
#include "rigidcert/errors.hpp"

namespace rigidcert {

SuperStabilityCertificate certify_superstable(const Framework& f,
                                              const std::optional<StressVector>& stress) {
    validate_framework(f);
    const size_t d = f.config.dimension, n = f.graph.vertex_count;

    SuperStabilityCertificate cert;
    cert.dimension = d;
    cert.vertex_count = n;
    cert.span_dim = affine_span_dim(f.config.points);

    StressVector w;
    if (stress) {
        w = *stress;
    } else {
        const auto basis = stress_basis(f);
        if (basis.size() != 1)
            throw HypothesisError("certify_superstable: stress search out of scope (stress space "
                                  "dimension is " +
                                  std::to_string(basis.size()) + ", not 1; supply a stress)");
        w = basis.front();
    }

    RatMatrix omega = assemble_stress_matrix(f, w); // rejects non-equilibrium stresses
    PsdReport psd = psd_certify(omega);
    if (!stress && !psd.is_psd) {
        // The basis vector's sign is arbitrary; the certificate tries both.
        StressVector neg(w.size());
        for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        RatMatrix omega_neg = assemble_stress_matrix(f, neg);
        PsdReport psd_neg = psd_certify(omega_neg);
        if (psd_neg.is_psd) {
            w = std::move(neg);
            omega = std::move(omega_neg);
            psd = std::move(psd_neg);
        }
    }

    cert.stress = std::move(w);
    cert.psd = std::move(psd);
    cert.stress_matrix_rank = rank(omega);
    cert.conic = conic_at_infinity(f);
    cert.verdict = cert.span_dim == d && cert.psd.is_psd &&
                   cert.stress_matrix_rank == n - d - 1 && !cert.conic.conic_exists;
    return cert;
}

GgrReport ggr_report(size_t d, size_t m, size_t n, std::uint64_t seed) {
    const GateReport gate = hendrickson_gate(d, m, n);
    if (!gate.ok) {
        std::string msg = "ggr_report: size hypotheses violated:";
        for (const auto& r : gate.reasons) msg += " " + r + ";";
        throw HypothesisError(msg);
    }

    RandomSource rng(seed);
    Construction c = build_kmn(d, m, n, rng);

    GgrReport rep;
    rep.d = d;
    rep.m = m;
    rep.n = n;
    rep.seed = seed;
    rep.audit = c.audit;
    rep.core_certificate = certify_superstable(core_subframework(c.framework, d));
    rep.framework = std::move(c.framework);

    const auto computed = [&](std::string fact, bool holds) {
        rep.claims.push_back({std::move(fact), ClaimBasis::Computed, holds});
    };
    const auto cited = [&](std::string fact) {
        rep.claims.push_back({std::move(fact), ClaimBasis::CitedTheorem, true});
    };
    computed("core subframework is super stable (PSD stress matrix of rank n-d-1, no conic at "
             "infinity)",
             rep.core_certificate.verdict);
    computed("framework is infinitesimally rigid (rigidity matrix rank d(m+n) - C(d+1,2))",
             rep.audit.inf_rigid);
    computed("equilibrium stress space has dimension " + std::to_string(rep.audit.stress_dim) +
                 " = (m-d-1)(n-d-1) + gale rank of the Veronese images",
             rep.audit.stress_dim == rep.audit.stress_dim_expected &&
                 rep.audit.stress_dim == rep.audit.bolker_roth_dim);
    computed("configuration is in general position", rep.audit.general_position);
    computed("Veronese images of the configuration affinely span the full ambient space",
             rep.audit.veronese_full_span);
    cited("a super stable framework is universally rigid, so the core is universally rigid");
    cited("adding a vertex joined to d+1 or more affinely spanning neighbors preserves universal "
          "rigidity, so the constructed framework is universally rigid");
    cited("a graph with a universally rigid and infinitesimally rigid generic realization is "
          "generically globally rigid, so this complete bipartite graph is generically globally "
          "rigid in this dimension");
    return rep;
}

} // namespace rigidcert

#include <iostream>
#include <string>

#include "rigidcert/certify.hpp"
#include "rigidcert/cli.hpp"
#include "rigidcert/construct.hpp"
#include "rigidcert/elimination.hpp"
#include "rigidcert/errors.hpp"
#include "rigidcert/jsonio.hpp"
#include "rigidcert/rigidity.hpp"
#include "rigidcert/veronese.hpp"

namespace rigidcert {

namespace {

// A random simple graph plus random rational coordinates; used to fuzz the
// audits with inputs that have no special structure.
Framework random_framework(RandomSource& rng, size_t d, size_t n) {
    Framework f;
    f.graph.vertex_count = n;
    f.config.dimension = d;
    for (size_t i = 0; i < n; ++i) {
        f.config.points.push_back(rng.point(d));
        for (size_t j = i + 1; j < n; ++j)
            if (rng.uniform(0, 1) == 1) f.graph.edges.emplace_back(i, j);
    }
    if (f.graph.edges.empty()) f.graph.edges.emplace_back(0, n - 1);
    return f;
}

Framework random_bipartite(RandomSource& rng, size_t d, size_t u, size_t v) {
    Framework f;
    const BipartiteGraph bg = complete_bipartite(u, v);
    f.graph = bg.graph;
    f.partition = bg.partition;
    f.config.dimension = d;
    for (size_t i = 0; i < u + v; ++i) f.config.points.push_back(rng.point(d));
    return f;
}

} // namespace

int run_selftest(std::ostream& out) {
    size_t failures = 0;
    const auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    for (size_t d = 1; d <= 3; ++d) {
        bool ok = false;
        try {
            const Framework core = build_core(d);
            const auto cert = certify_superstable(core);
            ok = cert.verdict && cert.stress_matrix_rank == d + 1;
        } catch (const Error&) {
            ok = false;
        }
        check("core d=" + std::to_string(d) + " super stable with stress rank d+1", ok);
    }

    for (size_t d = 1; d <= 3; ++d) {
        const Framework core = build_core(d);
        const auto rel = hull_relation(part_points(core, Side::U), part_points(core, Side::V), d);
        check("core d=" + std::to_string(d) + " Veronese hulls meet in relative interiors",
              rel.status == HullStatus::RelativeInteriorIntersect);
    }

    {
        std::vector<VecQ> p, q;
        for (long t = 1; t <= 3; ++t) p.push_back(moment_curve(Rational(t), 2));
        for (long t = 4; t <= 6; ++t) q.push_back(moment_curve(Rational(t), 2));
        const auto rel = hull_relation(p, q, 2);
        check("non-alternating d=2 parts are strictly separated by a quadric",
              rel.status == HullStatus::DisjointStrictlySeparable &&
                  rel.separating_quadric.has_value());
    }

    {
        RandomSource rng(2024);
        const Construction c = build_kmn(2, 3, 4, rng);
        check("K_{3,4} d=2 audit: stress dim 1, rigid, general position",
              c.audit.stress_dim == 1 && c.audit.inf_rigid && c.audit.general_position);
        const std::string s1 = framework_to_json(c.framework);
        const std::string s2 = framework_to_json(framework_from_json(s1));
        check("framework JSON round trip is byte-identical", s1 == s2);
    }

    {
        RandomSource rng(77);
        bool all = true;
        for (int i = 0; i < 40 && all; ++i) {
            const size_t d = static_cast<size_t>(rng.uniform(1, 3));
            const size_t n = static_cast<size_t>(rng.uniform(static_cast<long>(d), 8));
            if (n == 0) continue;
            const Framework f = random_framework(rng, d, std::max<size_t>(n, 2));
            all = maxwell_audit(f).identity_holds;
        }
        check("index identities hold on 40 fuzzed frameworks", all);
    }

    {
        RandomSource rng(99);
        bool all = true;
        for (int i = 0; i < 20 && all; ++i) {
            const size_t d = static_cast<size_t>(rng.uniform(1, 3));
            const size_t u = static_cast<size_t>(rng.uniform(static_cast<long>(d) + 1, 6));
            const size_t v = static_cast<size_t>(rng.uniform(static_cast<long>(d) + 1, 6));
            const Framework f = random_bipartite(rng, d, u, v);
            if (!is_general_position(f.config)) continue;
            all = bolker_roth_dim(f) == stress_basis(f).size();
        }
        check("Gale-rank stress formula matches cokernel on 20 random bipartite frameworks", all);
    }

    out << (failures == 0 ? "selftest: all checks passed\n"
                          : "selftest: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : 1;
}

} // namespace rigidcert

#include "rigidcert/construct.hpp"

#include <algorithm>
#include <cstdlib>

#include "rigidcert/certify.hpp"
#include "rigidcert/elimination.hpp"
#include "rigidcert/errors.hpp"
#include "rigidcert/rigidity.hpp"
#include "rigidcert/veronese.hpp"

namespace rigidcert {

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t RandomSource::next() {
    ++draws_;
    return engine_();
}

long RandomSource::uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Rejection keeps the distribution exact and the byte stream portable.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    for (;;) {
        const std::uint64_t r = next();
        if (r < limit) return lo + static_cast<long>(r % span);
    }
}

Rational RandomSource::coordinate() {
    const long num = uniform(-1000000, 1000000);
    const long den = uniform(1, 1000);
    return Rational(num, den);
}

VecQ RandomSource::point(size_t d) {
    VecQ p(d);
    for (auto& x : p) x = coordinate();
    return p;
}

VecQ moment_curve(const Rational& t, size_t d) {
    VecQ p(d);
    Rational pow = Rational(1);
    for (size_t k = 0; k < d; ++k) {
        pow = pow * t;
        p[k] = pow;
    }
    return p;
}

CoreSpec default_core_spec(size_t d) {
    CoreSpec s;
    s.dimension = d;
    for (size_t i = 1; i <= 2 * (d + 1); ++i) s.parameters.emplace_back(static_cast<long>(i));
    return s;
}

Framework build_core(size_t d, const std::optional<CoreSpec>& spec) {
    const CoreSpec cs = spec ? *spec : default_core_spec(d);
    if (cs.dimension != d) throw HypothesisError("build_core: spec dimension mismatch");
    if (cs.parameters.size() != 2 * (d + 1))
        throw HypothesisError("build_core: need exactly 2(d+1) parameters");
    for (size_t i = 1; i < cs.parameters.size(); ++i)
        if (!(cs.parameters[i - 1] < cs.parameters[i]))
            throw HypothesisError("build_core: parameters must strictly alternate (increase)");

    Framework f;
    const BipartiteGraph bg = complete_bipartite(d + 1, d + 1);
    f.graph = bg.graph;
    f.partition = bg.partition;
    f.config.dimension = d;
    f.config.points.resize(2 * (d + 1));
    for (size_t i = 0; i <= d; ++i) {
        f.config.points[i] = moment_curve(cs.parameters[2 * i], d);         // s_i -> U
        f.config.points[d + 1 + i] = moment_curve(cs.parameters[2 * i + 1], d); // t_i -> V
    }
    validate_framework(f);

    // Verified, not assumed: part spans, Veronese span, super stability.
    if (affine_span_dim(part_points(f, Side::U)) != d ||
        affine_span_dim(part_points(f, Side::V)) != d)
        throw InternalError("build_core: a part fails to span (this is a bug)");
    if (veronese_affine_span_dim(f.config.points) != 2 * d)
        throw InternalError("build_core: Veronese span is not 2d (this is a bug)");
    if (!certify_superstable(f).verdict)
        throw InternalError("build_core: core is not super stable (this is a bug)");
    return f;
}

std::vector<VecQ> part_points(const Framework& f, Side side) {
    if (!f.partition) throw HypothesisError("framework has no bipartition");
    const auto& ids = side == Side::U ? f.partition->part_U : f.partition->part_V;
    std::vector<VecQ> pts;
    pts.reserve(ids.size());
    for (size_t v : ids) pts.push_back(f.config.points[v]);
    return pts;
}

Framework trilaterate(const Framework& f, Side side, const VecQ& point) {
    if (!f.partition) throw HypothesisError("trilaterate: framework has no bipartition");
    const size_t d = f.config.dimension;
    if (point.size() != d) throw HypothesisError("trilaterate: point dimension mismatch");
    const Side opp = side == Side::U ? Side::V : Side::U;
    const auto opp_pts = part_points(f, opp);
    if (opp_pts.size() < d + 1 || affine_span_dim(opp_pts) != d)
        throw HypothesisError(
            "trilaterate: opposite part must have >= d+1 vertices affinely spanning the space");

    const size_t u = f.partition->part_U.size();
    // Insert into the U block (new id = u, shifting V ids) or append to V, so
    // vertex ids always read part U first.
    const size_t new_id = side == Side::U ? u : f.graph.vertex_count;
    const auto remap = [&](size_t v) { return v >= new_id ? v + 1 : v; };

    Framework g;
    g.config.dimension = d;
    g.graph.vertex_count = f.graph.vertex_count + 1;
    g.config.points.resize(g.graph.vertex_count);
    for (size_t v = 0; v < f.graph.vertex_count; ++v) g.config.points[remap(v)] = f.config.points[v];
    g.config.points[new_id] = point;

    BipartitePartition part;
    for (size_t v : f.partition->part_U) part.part_U.push_back(remap(v));
    for (size_t v : f.partition->part_V) part.part_V.push_back(remap(v));
    (side == Side::U ? part.part_U : part.part_V).push_back(new_id);
    std::sort(part.part_U.begin(), part.part_U.end());
    std::sort(part.part_V.begin(), part.part_V.end());

    for (const auto& [i, j] : f.graph.edges) g.graph.edges.emplace_back(remap(i), remap(j));
    for (size_t v : (opp == Side::U ? part.part_U : part.part_V))
        g.graph.edges.emplace_back(std::min(v, new_id), std::max(v, new_id));
    std::sort(g.graph.edges.begin(), g.graph.edges.end());
    g.partition = std::move(part);
    validate_framework(g);
    return g;
}

GateReport hendrickson_gate(size_t d, size_t m, size_t n) {
    GateReport rep;
    const size_t min_part = d + 1;
    const size_t min_total = (d + 2) * (d + 1) / 2 + 1; // C(d+2,2) + 1
    if (m < min_part)
        rep.reasons.push_back("m = " + std::to_string(m) + " < d + 1 = " + std::to_string(min_part));
    if (n < min_part)
        rep.reasons.push_back("n = " + std::to_string(n) + " < d + 1 = " + std::to_string(min_part));
    if (m + n < min_total)
        rep.reasons.push_back("m + n = " + std::to_string(m + n) + " < " + std::to_string(min_total));
    rep.ok = rep.reasons.empty();
    return rep;
}

size_t bolker_roth_dim(const Framework& f) {
    if (!f.partition) throw HypothesisError("bolker_roth_dim: framework has no bipartition");
    const size_t d = f.config.dimension;
    const auto& pu = f.partition->part_U;
    const auto& pv = f.partition->part_V;
    // Complete bipartite check: every cross pair present, nothing else.
    if (f.graph.edges.size() != pu.size() * pv.size())
        throw HypothesisError("bolker_roth_dim: graph is not complete bipartite");

    const auto pts_u = part_points(f, Side::U);
    const auto pts_v = part_points(f, Side::V);
    if (affine_span_dim(pts_u) != d || affine_span_dim(pts_v) != d)
        throw HypothesisError("bolker_roth_dim: both parts must affinely span the space");

    const auto part_config = [&](const std::vector<VecQ>& pts) {
        RatMatrix m(pts.size(), d + 1);
        for (size_t i = 0; i < pts.size(); ++i) {
            for (size_t j = 0; j < d; ++j) m.at(i, j) = pts[i][j];
            m.at(i, d) = Rational(1);
        }
        return m;
    };
    const size_t rank_gp = rank(gale_dual(part_config(pts_u)));
    const size_t rank_gq = rank(gale_dual(part_config(pts_v)));
    const size_t rank_gv = rank(gale_dual(veronese_config_matrix(f.config.points, d)));
    return rank_gp * rank_gq + rank_gv;
}

Framework core_subframework(const Framework& f, size_t d) {
    if (!f.partition) throw HypothesisError("core_subframework: framework has no bipartition");
    if (f.partition->part_U.size() < d + 1 || f.partition->part_V.size() < d + 1)
        throw HypothesisError("core_subframework: parts smaller than d+1");
    Framework core;
    const BipartiteGraph bg = complete_bipartite(d + 1, d + 1);
    core.graph = bg.graph;
    core.partition = bg.partition;
    core.config.dimension = d;
    core.config.points.resize(2 * (d + 1));
    for (size_t i = 0; i <= d; ++i) {
        core.config.points[i] = f.config.points[f.partition->part_U[i]];
        core.config.points[d + 1 + i] = f.config.points[f.partition->part_V[i]];
    }
    validate_framework(core);
    return core;
}

namespace {

size_t retry_budget() {
    if (const char* env = std::getenv("RIGIDCERT_RETRY_BUDGET")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<size_t>(v);
    }
    return 16;
}

} // namespace

Construction build_kmn(size_t d, size_t m, size_t n, RandomSource& rng,
                       const PointSampler& sampler) {
    const GateReport gate = hendrickson_gate(d, m, n);
    if (!gate.ok) {
        std::string msg = "build_kmn: size hypotheses violated:";
        for (const auto& r : gate.reasons) msg += " " + r + ";";
        throw HypothesisError(msg);
    }

    const size_t big_d = (d + 1) * (d + 2) / 2 - 1; // ambient Veronese dimension
    const PointSampler draw =
        sampler ? sampler : [](RandomSource& r, size_t dim) { return r.point(dim); };
    const size_t budget = retry_budget();
    const Framework core = build_core(d);

    for (size_t attempt = 0; attempt < budget; ++attempt) {
        Framework f = core;
        // Grow toward the targets, adding to the smaller deficient part
        // (ties go to U) so the order is deterministic.
        for (;;) {
            const size_t cu = f.partition->part_U.size();
            const size_t cv = f.partition->part_V.size();
            if (cu == m && cv == n) break;
            Side side;
            if (cu < m && cv < n)
                side = cu <= cv ? Side::U : Side::V;
            else
                side = cu < m ? Side::U : Side::V;
            f = trilaterate(f, side, draw(rng, d));
        }

        ConstructionAudit a;
        a.retries_used = attempt;
        a.core_superstable = certify_superstable(core_subframework(f, d)).verdict;
        a.general_position = is_general_position(f.config);
        a.veronese_full_span = veronese_affine_span_dim(f.config.points) == big_d;
        a.stress_dim = stress_basis(f).size();
        a.stress_dim_expected = (m - d - 1) * (n - d - 1) + (m + n - big_d - 1);
        a.bolker_roth_dim = a.general_position ? bolker_roth_dim(f) : 0;
        a.inf_rigid = is_infinitesimally_rigid(f).rigid;
        const bool ok = a.core_superstable && a.general_position && a.veronese_full_span &&
                        a.inf_rigid && a.stress_dim == a.stress_dim_expected &&
                        a.bolker_roth_dim == a.stress_dim_expected;
        if (ok) {
            a.universally_rigid_by_construction = true;
            return Construction{std::move(f), a, rng.seed()};
        }
    }
    throw RetryExhaustedError("build_kmn: audit failed for " + std::to_string(budget) +
                              " resamplings from seed " + std::to_string(rng.seed()));
}

} // namespace rigidcert

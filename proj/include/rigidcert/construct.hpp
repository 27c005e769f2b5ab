#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigidcert/framework.hpp"

namespace rigidcert {

// Deterministic random source: same seed, same construction, bit for bit.
// Sampling uses explicit rejection on raw engine output so results do not
// depend on any library's distribution internals.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draws() const { return draws_; }

    // Uniform integer in [lo, hi] via rejection sampling.
    long uniform(long lo, long hi);

    // Coordinate distribution: numerator in [-10^6, 10^6], denominator in [1, 10^3].
    Rational coordinate();
    VecQ point(size_t d);

private:
    std::uint64_t next();

    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::uint64_t draws_ = 0;
};

VecQ moment_curve(const Rational& t, size_t d);

struct CoreSpec {
    size_t dimension = 0;
    // 2(d+1) strictly increasing parameters s1 < t1 < s2 < t2 < ...; the s's
    // (even positions) place part U, the t's (odd positions) place part V.
    VecQ parameters;
};

CoreSpec default_core_spec(size_t d);

// K_{d+1,d+1} on the moment curve with alternating parameters; the returned
// framework is verified (part spans, Veronese span, super stability), not
// assumed.
Framework build_core(size_t d, const std::optional<CoreSpec>& spec = std::nullopt);

enum class Side { U, V };

// Appends a vertex on `side`, joined to every vertex of the opposite part.
// Requires the opposite part to have >= d+1 vertices affinely spanning E^d.
// Vertex ids stay in part-U-first order (V ids shift when adding to U).
Framework trilaterate(const Framework& f, Side side, const VecQ& point);

struct ConstructionAudit {
    bool core_superstable = false;
    bool general_position = false;
    size_t stress_dim = 0;
    size_t stress_dim_expected = 0; // (m-d-1)(n-d-1) + (m+n) - C(d+2,2) + 1
    size_t bolker_roth_dim = 0;
    bool inf_rigid = false;
    bool veronese_full_span = false;
    size_t retries_used = 0;
    // Provenance flag, not a computed fact: universal rigidity of the full
    // framework is inherited from the certified core through trilateration.
    bool universally_rigid_by_construction = false;
};

struct Construction {
    Framework framework;
    ConstructionAudit audit;
    std::uint64_t seed = 0;
};

struct GateReport {
    bool ok = false;
    std::vector<std::string> reasons;
};

// Necessary-size gate: m, n >= d+1 and m + n >= C(d+2,2) + 1.
GateReport hendrickson_gate(size_t d, size_t m, size_t n);

// Test hook: overrides how new vertex positions are sampled.
using PointSampler = std::function<VecQ(RandomSource&, size_t)>;

// Core + trilaterations with post-hoc verification; re-samples all added
// points (fresh draws, bounded budget) until every audit check passes.
// Budget defaults to 16, overridable via RIGIDCERT_RETRY_BUDGET.
Construction build_kmn(size_t d, size_t m, size_t n, RandomSource& rng,
                       const PointSampler& sampler = {});

// Stress-space dimension of a complete bipartite framework from the three
// Gale ranks: rank(Gp) * rank(Gq) + rank(G of the Veronese images).
// Requires both parts to affinely span E^d.
size_t bolker_roth_dim(const Framework& f);

// The K_{d+1,d+1} subframework on the first d+1 vertices of each part.
Framework core_subframework(const Framework& f, size_t d);

std::vector<VecQ> part_points(const Framework& f, Side side);

} // namespace rigidcert

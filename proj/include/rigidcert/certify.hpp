#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidcert/construct.hpp"
#include "rigidcert/framework.hpp"
#include "rigidcert/psd.hpp"
#include "rigidcert/rigidity.hpp"
#include "rigidcert/veronese.hpp"

namespace rigidcert {

struct SuperStabilityCertificate {
    StressVector stress;
    size_t stress_matrix_rank = 0;
    PsdReport psd;
    ConicReport conic;
    size_t span_dim = 0;
    size_t dimension = 0;
    size_t vertex_count = 0;
    // verdict <=> span_dim = d, PSD, rank = n-d-1, and no conic at infinity.
    bool verdict = false;
};

// Certifies super stability from an equilibrium stress. When no stress is
// supplied the stress space must be one-dimensional; both signs of the basis
// vector are tried. A supplied stress is used as given.
SuperStabilityCertificate certify_superstable(const Framework& f,
                                              const std::optional<StressVector>& stress = std::nullopt);

enum class ClaimBasis { Computed, CitedTheorem };

struct Claim {
    std::string fact;
    ClaimBasis basis = ClaimBasis::Computed;
    bool holds = true;
};

struct GgrReport {
    size_t d = 0, m = 0, n = 0;
    std::uint64_t seed = 0;
    Framework framework;
    ConstructionAudit audit;
    SuperStabilityCertificate core_certificate;
    // Every Computed claim is backed by an exact check in this run; cited
    // claims name the principle they rely on instead of re-deriving it.
    std::vector<Claim> claims;
};

// Builds K_{m,n}, certifies its core, and assembles the claims ledger that
// separates machine-checked facts from cited theory.
GgrReport ggr_report(size_t d, size_t m, size_t n, std::uint64_t seed);

} // namespace rigidcert

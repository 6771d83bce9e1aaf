#pragma once

#include "chentype/finitetype/poles.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chentype {

struct ClaimOptions {
    std::uint64_t seed = 1;
    /// Sample points for numeric cross-checks.
    int samples = 25;
    /// Relative tolerance of numeric cross-checks.
    double tol = 1e-6;
    std::size_t budget = kDefaultTermBudget;
};

struct ClaimInfo {
    std::string id;
    /// Chart kinds the claim is stated for.
    std::vector<SurfaceKind> kinds;
    std::string anchor;
    std::string summary;
    bool known_discrepancy = false;
};

/// Every claim in registry order.
const std::vector<ClaimInfo>& claim_catalog();
/// Throws PreconditionError for an unknown id.
const ClaimInfo& claim_info(const std::string& id);

/// Runs one claim on a chart of a matching kind. Errors inside the claim are
/// captured as an ERROR report; a kind mismatch throws PreconditionError.
ClaimReport run_claim(const std::string& id, const SurfaceChart& s, const ClaimOptions& opt = {});

/// All claims stated for the chart's kind, in registry order.
std::vector<ClaimReport> claim_registry_run(const SurfaceChart& s, const ClaimOptions& opt = {});

/// Delta^II x = -(1/2K) grad^III(K, n) - 2n, both sides computed
/// independently. Symbolic first; past the term budget it falls back to 50
/// sample points at tolerance 1e-8 (NUMERIC_ONLY_PASS).
ClaimReport identity_check(const SurfaceChart& s, const ClaimOptions& opt = {});

/// Domain default chart for a claim: the default tube, the anchor ring with
/// kappa = 1, r = 1/3, or the inward unit sphere.
SurfaceChart default_chart(SurfaceKind k);

} // namespace chentype

#pragma once

#include "chentype/beltrami/operator.hpp"
#include "chentype/finitetype/report.hpp"

#include <optional>
#include <vector>

namespace chentype {

/// Pole data of one frame component of (Delta^II)^k n.
struct PoleRecord {
    int k = 0;
    /// 0 = t, 1 = h, 2 = b.
    int component = 0;
    bool zero = false;
    int delta_order = 0;
    int cos_order = 0;
    /// Leading coefficients in delta (on delta = 0) and in cos(phi) (on cos = 0).
    CanonForm delta_leading;
    CanonForm cos_leading;
};

/// Pole orders of every component of the first k_max iterates of the Gauss
/// map. Tubes and anchor rings only; throws ExpressionBudgetExceeded.
std::vector<PoleRecord> pole_growth(const SurfaceChart& s, int k_max, std::size_t budget = kDefaultTermBudget);

/// q with a = q b when the two canonical forms are rational multiples.
std::optional<Rational> proportionality(const CanonForm& a, const CanonForm& b);

/// How `computed` relates to `leading + remainder` where the remainder may
/// have delta order at most `delta_cap` and cos(phi) order at most `cos_cap`.
struct LeadingCheck {
    bool holds = false;
    int remainder_delta_order = 0;
    int remainder_cos_order = 0;
    /// computed's leading coefficient in `atom` over the expected one, when
    /// they are proportional.
    std::optional<Rational> ratio;
};
LeadingCheck check_leading(const Expr& computed, const Expr& leading, int delta_cap, int cos_cap, Symbol atom);

/// Applies the tube Delta^II to h(delta) beta^m / (delta^n (kappa cos)^(n-1))
/// and compares the top delta pole with
///   -h~(delta) beta^(m+2) / (2 delta^(n+3) (kappa cos)^(n+2)),
///   h~ = ((2n-1) delta - n)(4(n+1) delta - (2n+3)) h.
/// Only h~ modulo delta is visible in the top pole; the report carries the
/// engine's value of h~(0).
ClaimReport lemma1_check(int m, int n, const Expr& h, std::size_t budget = kDefaultTermBudget);

/// Anchor ring: Delta^II sin^m / (delta cos)^n against
/// 3 sin^(m+2) / (2 r (delta cos)^(n+2)) plus a remainder of order n + 1 in
/// both delta and cos(phi).
ClaimReport ring_recurrence_check(int m, int n, const SurfaceChart& ring);

/// Compares the engine's h_k(0) for k = 1..lambda_max, read off the top
/// delta pole of the t-component of (Delta^II)^k n, with the product
/// prod_{j<k} 12 j delta (4j - 5) and with the explicit second and third
/// iterate products.
ClaimReport h_lambda_check(int lambda_max, std::size_t budget = kDefaultTermBudget);

} // namespace chentype

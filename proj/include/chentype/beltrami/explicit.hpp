#pragma once

#include "chentype/beltrami/operator.hpp"

#include <array>

namespace chentype {

/// Coefficients (c_uu, c_uphi, c_phiphi, c_u, c_phi) of an operator written
/// out by hand, in the order of BeltramiOp::Coefficient.
using OperatorCoefficients = std::array<Expr, 5>;

/// Tube operator in closed form, with beta = kappa' cos(phi) + kappa tau sin(phi):
///   1/(kappa delta cos) [ d_uu - 2 tau d_uphi + (tau^2 - kappa delta cos / r) d_phiphi
///     + (1 - 2 delta) beta / (2 kappa delta cos) d_u
///     + (-tau' + tau beta (2 delta - 1) / (2 kappa delta cos) + kappa (2 delta - 1) sin / (2 r)) d_phi ].
OperatorCoefficients tube_display_operator();

/// The same operator with kappa' = tau = 0:
///   1/(kappa delta cos) [ d_uu - (kappa delta cos / r) d_phiphi + kappa (2 delta - 1) sin / (2 r) d_phi ].
OperatorCoefficients ring_display_operator();

/// Applies hand-written coefficients to a scalar.
Expr apply_coefficients(const OperatorCoefficients& c, const Expr& f, const UDerivativeRules& rules = {});

/// Per-coefficient comparison against the engine's expansion.
struct CoefficientDiff {
    int index = 0;
    /// "c_uu", "c_uphi", "c_phiphi", "c_u", "c_phi".
    std::string name;
    bool equal = true;
    CanonForm engine;
    CanonForm display;
};
std::vector<CoefficientDiff> compare_coefficients(const BeltramiOp& op, const OperatorCoefficients& c);

} // namespace chentype

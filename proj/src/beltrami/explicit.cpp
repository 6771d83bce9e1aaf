#include "chentype/beltrami/explicit.hpp"

namespace chentype {

OperatorCoefficients tube_display_operator()
{
    const Expr c = cos_phi(), s = sin_phi(), d = delta(), k = kappa(), t = tau(), r = radius(), b = beta();
    const Expr pre = 1 / (k * d * c);
    const Expr lead = 2 * k * d * c;
    return {pre,
            pre * (-2 * t),
            pre * (t * t - k * d * c / r),
            pre * ((1 - 2 * d) * b / lead),
            pre * (-tau(1) + t * b * (2 * d - 1) / lead + k * (2 * d - 1) * s / (2 * r))};
}

OperatorCoefficients ring_display_operator()
{
    const Expr c = cos_phi(), s = sin_phi(), d = delta(), k = kappa(), r = radius();
    const Expr pre = 1 / (k * d * c);
    return {pre, 0, pre * (-(k * d * c) / r), 0, pre * (k * (2 * d - 1) * s / (2 * r))};
}

Expr apply_coefficients(const OperatorCoefficients& c, const Expr& f, const UDerivativeRules& rules)
{
    const CanonForm g = canonicalize(f);
    const CanonForm gu = g.diff_u(rules), gp = g.diff_phi();
    const CanonForm parts[5] = {gu.diff_u(rules), gu.diff_phi(), gp.diff_phi(), gu, gp};
    CanonForm out;
    for (std::size_t i = 0; i < 5; ++i) out = out + canonicalize(c[i]) * parts[i];
    return Expr::canonical(out);
}

std::vector<CoefficientDiff> compare_coefficients(const BeltramiOp& op, const OperatorCoefficients& c)
{
    static const char* names[5] = {"c_uu", "c_uphi", "c_phiphi", "c_u", "c_phi"};
    std::vector<CoefficientDiff> out;
    for (int i = 0; i < 5; ++i) {
        CoefficientDiff d;
        d.index = i;
        d.name = names[i];
        d.engine = op.coefficient(static_cast<BeltramiOp::Coefficient>(i));
        d.display = canonicalize(c[static_cast<std::size_t>(i)]);
        d.equal = d.engine == d.display;
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace chentype

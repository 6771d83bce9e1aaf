#include "chentype/symexpr/profile.hpp"

#include "chentype/errors.hpp"

#include <cmath>
#include <numbers>

namespace chentype {

double Rng::uniform(double lo, double hi)
{
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

double Rng::uniform_signed(double lo, double hi)
{
    const bool negative = (engine_() >> 63) != 0;
    const double v = uniform(lo, hi);
    return negative ? -v : v;
}

double NumericProfile::value(Symbol s) const
{
    switch (s.kind) {
    case SymbolKind::CosPhi: return std::cos(phi);
    case SymbolKind::SinPhi: return std::sin(phi);
    case SymbolKind::Delta: return delta();
    case SymbolKind::Radius: return r;
    case SymbolKind::Kappa:
        if (s.order < 0 || static_cast<std::size_t>(s.order) >= kappa.size())
            throw MissingSymbol("profile lacks " + s.name());
        return kappa[static_cast<std::size_t>(s.order)];
    case SymbolKind::Tau:
        if (s.order < 0 || static_cast<std::size_t>(s.order) >= tau.size())
            throw MissingSymbol("profile lacks " + s.name());
        return tau[static_cast<std::size_t>(s.order)];
    }
    throw MissingSymbol("unknown symbol");
}

double NumericProfile::delta() const
{
    if (kappa.empty()) throw MissingSymbol("profile lacks kappa");
    return 1.0 - r * kappa[0] * std::cos(phi);
}

SpineProfile SpineProfile::default_profile() { return SpineProfile(Kind::Default, 0.0, 0.0); }

SpineProfile SpineProfile::helix(double kappa, double tau) { return SpineProfile(Kind::Helix, kappa, tau); }

SpineProfile SpineProfile::circle(double kappa) { return SpineProfile(Kind::Circle, kappa, 0.0); }

double SpineProfile::kappa(int order, double u) const
{
    if (kind_ == Kind::Default) {
        const double s = std::sin(u + order * std::numbers::pi / 2);
        return order == 0 ? 2.0 + s : s;
    }
    return order == 0 ? kappa0_ : 0.0;
}

double SpineProfile::tau(int order, double u) const
{
    if (kind_ == Kind::Default) return std::cos(u + order * std::numbers::pi / 2);
    return order == 0 ? tau0_ : 0.0;
}

NumericProfile SpineProfile::at(double u, double phi, double r, int max_order) const
{
    NumericProfile p;
    p.u = u;
    p.phi = phi;
    p.r = r;
    for (int k = 0; k <= max_order; ++k) {
        p.kappa.push_back(kappa(k, u));
        p.tau.push_back(tau(k, u));
    }
    return p;
}

NumericProfile random_profile(Rng& rng)
{
    NumericProfile p;
    for (int k = 0; k <= kMaxDerivativeOrder; ++k) {
        p.kappa.push_back(rng.uniform_signed(0.1, 2.0));
        p.tau.push_back(rng.uniform_signed(0.1, 2.0));
    }
    p.r = rng.uniform(0.05, 0.3);
    do {
        p.phi = rng.uniform(0.0, 2 * std::numbers::pi);
    } while (std::abs(std::cos(p.phi)) < 0.05);
    return p;
}

} // namespace chentype

#include "chentype/symexpr/jet.hpp"

#include "chentype/errors.hpp"

#include <cmath>
#include <numbers>

namespace chentype {

namespace {

int size_for(int order) { return (order + 1) * (order + 2) / 2; }

} // namespace

Jet2::Jet2(int order, double constant) : order_(order), coef_(static_cast<std::size_t>(size_for(order)), 0.0)
{
    coef_[0] = constant;
}

Jet2 Jet2::from_u_derivatives(int order, std::span<const double> derivatives)
{
    Jet2 j(order);
    double factorial = 1.0;
    for (int k = 0; k <= order && k < static_cast<int>(derivatives.size()); ++k) {
        if (k > 0) factorial *= k;
        j.coefficient(k, 0) = derivatives[static_cast<std::size_t>(k)] / factorial;
    }
    return j;
}

Jet2 Jet2::cos_phi(int order, double phi0)
{
    Jet2 j(order);
    double factorial = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) factorial *= k;
        j.coefficient(0, k) = std::cos(phi0 + k * std::numbers::pi / 2) / factorial;
    }
    return j;
}

Jet2 Jet2::sin_phi(int order, double phi0)
{
    Jet2 j(order);
    double factorial = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) factorial *= k;
        j.coefficient(0, k) = std::sin(phi0 + k * std::numbers::pi / 2) / factorial;
    }
    return j;
}

Jet2 Jet2::d_u() const
{
    if (order_ <= 0) return Jet2(std::max(order_ - 1, 0));
    Jet2 r(order_ - 1);
    for (int n = 0; n <= order_ - 1; ++n)
        for (int j = 0; j <= n; ++j) r.coefficient(n - j, j) = (n - j + 1) * coefficient(n - j + 1, j);
    return r;
}

Jet2 Jet2::d_phi() const
{
    if (order_ <= 0) return Jet2(std::max(order_ - 1, 0));
    Jet2 r(order_ - 1);
    for (int n = 0; n <= order_ - 1; ++n)
        for (int j = 0; j <= n; ++j) r.coefficient(n - j, j) = (j + 1) * coefficient(n - j, j + 1);
    return r;
}

Jet2 Jet2::truncated(int order) const
{
    if (order >= order_) return *this;
    Jet2 r(order);
    std::copy_n(coef_.begin(), size_for(order), r.coef_.begin());
    return r;
}

Jet2& Jet2::operator+=(const Jet2& o)
{
    if (o.order_ < order_) *this = truncated(o.order_);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& o)
{
    if (o.order_ < order_) *this = truncated(o.order_);
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
    return *this;
}

Jet2& Jet2::operator*=(double k)
{
    for (auto& c : coef_) c *= k;
    return *this;
}

Jet2 Jet2::operator-() const
{
    Jet2 r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b)
{
    const int order = std::min(a.order_, b.order_);
    Jet2 r(order);
    for (int na = 0; na <= order; ++na)
        for (int ja = 0; ja <= na; ++ja) {
            const double x = a.coefficient(na - ja, ja);
            if (x == 0.0) continue;
            for (int nb = 0; nb <= order - na; ++nb)
                for (int jb = 0; jb <= nb; ++jb)
                    r.coefficient(na - ja + nb - jb, ja + jb) += x * b.coefficient(nb - jb, jb);
        }
    return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b)
{
    const int order = std::min(a.order_, b.order_);
    const double b0 = b.coef_[0];
    if (std::abs(b0) < 1e-300) throw DivisionNearZero("jet division by a vanishing value");
    // q = a / b solved degree by degree from a = b q.
    Jet2 q(order);
    for (int n = 0; n <= order; ++n)
        for (int j = 0; j <= n; ++j) {
            const int i = n - j;
            double s = a.coefficient(i, j);
            for (int k = 0; k <= i; ++k)
                for (int l = 0; l <= j; ++l) {
                    if (k == 0 && l == 0) continue;
                    s -= b.coefficient(k, l) * q.coefficient(i - k, j - l);
                }
            q.coefficient(i, j) = s / b0;
        }
    return q;
}

Jet2 evaluate(const CanonForm& form, const JetEnv& env)
{
    const int order = env.cos.order();
    if (form.is_zero()) return Jet2(order);

    std::array<const Jet2*, kSlotCount> base{};
    base[kSlotCos] = &env.cos;
    base[kSlotSin] = &env.sin;
    base[kSlotRadius] = &env.radius;
    for (int k = 0; k <= kMaxDerivativeOrder; ++k) {
        if (static_cast<std::size_t>(k) < env.kappa.size()) base[kappa_slot(k)] = &env.kappa[static_cast<std::size_t>(k)];
        if (static_cast<std::size_t>(k) < env.tau.size()) base[tau_slot(k)] = &env.tau[static_cast<std::size_t>(k)];
    }

    std::array<std::vector<Jet2>, kSlotCount> powers;
    auto power_of = [&](int slot, int e) -> const Jet2& {
        if (!base[slot]) throw MissingSymbol("jet environment lacks " + symbol_of_slot(slot).name());
        auto& table = powers[slot];
        if (table.empty()) {
            table.push_back(Jet2(order, 1.0));
            table.push_back(*base[slot]);
        }
        while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * *base[slot]);
        return table[static_cast<std::size_t>(e)];
    };

    Jet2 num(order);
    for (const auto& t : form.numerator().terms()) {
        Jet2 term(order, t.coef.get_d());
        const int top = t.mono.highest_slot();
        for (int slot = 0; slot <= top; ++slot)
            if (int e = t.mono.exponent(slot)) term = term * power_of(slot, e);
        num += term;
    }

    const auto& d = form.denominator();
    Jet2 den(order, d.constant.get_d());
    auto multiply_power = [&](const Jet2& x, int e) {
        for (int i = 0; i < e; ++i) den = den * x;
    };
    multiply_power(env.delta, d.delta);
    multiply_power(env.cos, d.cos);
    if (d.kappa) multiply_power(*base[kappa_slot(0)], d.kappa);
    multiply_power(env.radius, d.radius);
    return num / den;
}

} // namespace chentype

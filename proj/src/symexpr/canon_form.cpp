#include "chentype/symexpr/canon_form.hpp"

#include "chentype/errors.hpp"
#include "chentype/symexpr/profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace chentype {

namespace {

constexpr int kSlotKappa = kappa_slot(0);

Monomial den_part(int cos, int kappa, int radius)
{
    Monomial m;
    m.set(kSlotCos, cos);
    m.set(kSlotKappa, kappa);
    m.set(kSlotRadius, radius);
    return m;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Numerator of f rewritten over the larger denominator d.
Poly lift(const CanonForm& f, const DenMonomial& d)
{
    const auto& fd = f.denominator();
    Poly p = f.numerator().scaled(Integer(d.constant / fd.constant));
    p = p.shifted(den_part(d.cos - fd.cos, d.kappa - fd.kappa, d.radius - fd.radius));
    return p.times_delta(d.delta - fd.delta);
}

// Poly -> delta^j * rest with rest not divisible by delta.
std::pair<Poly, int> pull_delta(Poly p)
{
    int j = 0;
    while (p.max_exponent(kSlotCos) > 0) {
        auto q = p.divide_by_delta();
        if (!q) break;
        p = std::move(*q);
        ++j;
    }
    return {std::move(p), j};
}

std::string power_string(const std::string& base, int e)
{
    return e == 1 ? base : base + "^" + std::to_string(e);
}

template <class T>
T power(T base, int e)
{
    T r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace

CanonForm CanonForm::constant(const Rational& q)
{
    if (q == 0) return {};
    DenMonomial d;
    d.constant = q.get_den();
    return CanonForm(Poly::constant(q.get_num()), d);
}

CanonForm CanonForm::symbol(Symbol s)
{
    if (s.kind == SymbolKind::Delta) return CanonForm(Poly::delta(), {});
    return CanonForm(Poly::monomial(Monomial::of(slot_of(s))), {});
}

CanonForm CanonForm::from_parts(Poly numerator, DenMonomial denominator)
{
    CanonForm f(std::move(numerator), std::move(denominator));
    f.normalize();
    return f;
}

void CanonForm::normalize()
{
    if (den_.constant == 0) throw DivisionNearZero("zero denominator constant");
    if (num_.is_zero()) {
        den_ = {};
        return;
    }
    if (den_.constant < 0) {
        num_ = -num_;
        den_.constant = -den_.constant;
    }

    // Negative exponents move to the numerator.
    Monomial up;
    for (auto [slot, field] : {std::pair{kSlotCos, &den_.cos}, {kSlotKappa, &den_.kappa}, {kSlotRadius, &den_.radius}}) {
        if (*field < 0) {
            up.set(slot, -*field);
            *field = 0;
        }
    }
    if (!up.is_one()) num_ = num_.shifted(up);
    if (den_.delta < 0) {
        num_ = num_.times_delta(-den_.delta);
        den_.delta = 0;
    }

    for (auto [slot, field] : {std::pair{kSlotCos, &den_.cos}, {kSlotKappa, &den_.kappa}, {kSlotRadius, &den_.radius}}) {
        if (*field == 0) continue;
        int common = std::min(*field, num_.min_exponent(slot));
        if (common > 0) {
            num_ = num_.divided_by_power(slot, common);
            *field -= common;
        }
    }

    while (den_.delta > 0) {
        auto q = num_.divide_by_delta();
        if (!q) break;
        num_ = std::move(*q);
        --den_.delta;
    }

    if (den_.constant != 1) {
        Integer g;
        Integer c = num_.content();
        mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_.constant.get_mpz_t());
        if (g != 1) {
            num_ = num_.divided_exactly(g);
            den_.constant /= g;
        }
    }
}

std::optional<Rational> CanonForm::constant_value() const
{
    if (num_.is_zero()) return Rational(0);
    if (!num_.is_constant() || den_.delta || den_.cos || den_.kappa || den_.radius) return std::nullopt;
    Rational q(num_.terms()[0].coef, den_.constant);
    q.canonicalize();
    return q;
}

CanonForm CanonForm::operator-() const { return CanonForm(-num_, den_); }

CanonForm operator+(const CanonForm& a, const CanonForm& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return CanonForm::from_parts(a.num_ + b.num_, a.den_);
    DenMonomial d;
    d.constant = lcm(a.den_.constant, b.den_.constant);
    d.delta = std::max(a.den_.delta, b.den_.delta);
    d.cos = std::max(a.den_.cos, b.den_.cos);
    d.kappa = std::max(a.den_.kappa, b.den_.kappa);
    d.radius = std::max(a.den_.radius, b.den_.radius);
    return CanonForm::from_parts(lift(a, d) + lift(b, d), d);
}

CanonForm operator-(const CanonForm& a, const CanonForm& b) { return a + (-b); }

CanonForm operator*(const CanonForm& a, const CanonForm& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    DenMonomial d;
    d.constant = a.den_.constant * b.den_.constant;
    d.delta = a.den_.delta + b.den_.delta;
    d.cos = a.den_.cos + b.den_.cos;
    d.kappa = a.den_.kappa + b.den_.kappa;
    d.radius = a.den_.radius + b.den_.radius;
    return CanonForm::from_parts(a.num_ * b.num_, d);
}

CanonForm operator/(const CanonForm& a, const CanonForm& b) { return a * b.inverse(); }

CanonForm CanonForm::inverse() const
{
    if (num_.is_zero()) throw DivisionNearZero("division by an exactly zero expression");
    auto [rest, j] = pull_delta(num_);
    if (rest.size() != 1) throw NonRationalStructure("denominator is not a monomial times a power of delta: " + to_string());
    const Term& t = rest.terms()[0];
    for (int slot = 0; slot < kSlotCount; ++slot) {
        if (t.mono.exponent(slot) == 0) continue;
        if (slot != kSlotCos && slot != kSlotKappa && slot != kSlotRadius)
            throw NonRationalStructure("denominator contains " + symbol_of_slot(slot).name() + ": " + to_string());
    }
    Poly n = Poly::monomial(den_part(den_.cos, den_.kappa, den_.radius), den_.constant).times_delta(den_.delta);
    DenMonomial d;
    d.constant = t.coef;
    d.delta = j;
    d.cos = t.mono.exponent(kSlotCos);
    d.kappa = t.mono.exponent(kSlotKappa);
    d.radius = t.mono.exponent(kSlotRadius);
    return from_parts(std::move(n), d);
}

CanonForm CanonForm::pow(int n) const
{
    if (n < 0) return inverse().pow(-n);
    CanonForm result = constant(1);
    CanonForm base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

CanonForm CanonForm::scaled(const Rational& q) const
{
    if (q == 0 || is_zero()) return {};
    DenMonomial d = den_;
    d.constant *= q.get_den();
    return from_parts(num_.scaled(q.get_num()), d);
}

CanonForm CanonForm::diff_phi() const
{
    if (is_zero()) return {};
    const Monomial sin_m = Monomial::of(kSlotSin);
    const Monomial cos_m = Monomial::of(kSlotCos);
    Poly n_phi = num_.partial(kSlotCos).shifted(sin_m).scaled(-1) + num_.partial(kSlotSin).shifted(cos_m);

    const int a = den_.delta;
    const int b = den_.cos;
    if (a == 0 && b == 0) return from_parts(std::move(n_phi), den_);

    // D'/D = a r kappa sin / delta - b sin / cos.
    DenMonomial d = den_;
    Poly out = n_phi;
    if (a > 0) {
        out = out.times_delta();
        ++d.delta;
    }
    if (b > 0) {
        out = out.shifted(cos_m);
        ++d.cos;
    }
    if (a > 0) {
        Monomial m = den_part(b > 0 ? 1 : 0, 1, 1);
        m.set(kSlotSin, 1);
        out = out - num_.shifted(m).scaled(a);
    }
    if (b > 0) {
        Poly t = num_.shifted(sin_m);
        if (a > 0) t = t.times_delta();
        out = out + t.scaled(b);
    }
    return from_parts(std::move(out), d);
}

CanonForm CanonForm::diff_u(const UDerivativeRules& rules) const
{
    if (is_zero()) return {};
    Poly n_u;
    for (int order = 0; order <= kMaxDerivativeOrder; ++order) {
        for (int slot : {kappa_slot(order), tau_slot(order)}) {
            if (num_.max_exponent(slot) == 0) continue;
            const bool is_kappa = slot == kappa_slot(order);
            if (is_kappa ? rules.kappa_constant : rules.torsion_free) continue;
            if (order == kMaxDerivativeOrder)
                throw Error("derivative order exceeds " + std::to_string(kMaxDerivativeOrder));
            n_u = n_u + num_.partial(slot).shifted(Monomial::of(slot + 2));
        }
    }

    const int a = den_.delta;
    const int e = den_.kappa;
    if (rules.kappa_constant || (a == 0 && e == 0)) return from_parts(std::move(n_u), den_);

    // D'/D = -a r kappa' cos / delta + e kappa' / kappa.
    const Monomial kappa1 = Monomial::of(kappa_slot(1));
    DenMonomial d = den_;
    Poly out = n_u;
    if (a > 0) {
        out = out.times_delta();
        ++d.delta;
    }
    if (e > 0) {
        out = out.shifted(Monomial::of(kSlotKappa));
        ++d.kappa;
    }
    if (a > 0) {
        Monomial m = kappa1 * den_part(1, e > 0 ? 1 : 0, 1);
        out = out + num_.shifted(m).scaled(a);
    }
    if (e > 0) {
        Poly t = num_.shifted(kappa1);
        if (a > 0) t = t.times_delta();
        out = out - t.scaled(e);
    }
    return from_parts(std::move(out), d);
}

int CanonForm::pole_order(Symbol atom) const
{
    switch (atom.kind) {
    case SymbolKind::Delta: return den_.delta;
    case SymbolKind::CosPhi: return den_.cos;
    case SymbolKind::Radius: return den_.radius;
    case SymbolKind::Kappa:
        if (atom.order == 0) return den_.kappa;
        return 0;
    default: return 0;
    }
}

CanonForm CanonForm::leading_coefficient(Symbol atom) const
{
    if (is_zero()) return {};
    if (atom.kind == SymbolKind::Delta) {
        // cos = 1/(r kappa): c^k -> (r kappa)^(D - k) over (r kappa)^D.
        const int top = num_.max_exponent(kSlotCos);
        std::vector<Term> terms;
        terms.reserve(num_.size());
        for (const auto& t : num_.terms()) {
            Term s = t;
            int k = s.mono.exponent(kSlotCos);
            s.mono.set(kSlotCos, 0);
            s.mono.add(kSlotRadius, top - k);
            s.mono.add(kSlotKappa, top - k);
            terms.push_back(std::move(s));
        }
        Poly p = Poly::from_terms(std::move(terms));
        p = p.shifted(den_part(0, den_.cos, den_.cos));
        DenMonomial d;
        d.constant = den_.constant;
        d.kappa = den_.kappa + top;
        d.radius = den_.radius + top;
        return from_parts(std::move(p), d);
    }
    if (atom.kind == SymbolKind::CosPhi) {
        std::vector<Term> terms;
        for (const auto& t : num_.terms())
            if (t.mono.exponent(kSlotCos) == 0) terms.push_back(t);
        DenMonomial d;
        d.constant = den_.constant;
        d.kappa = den_.kappa;
        d.radius = den_.radius;
        return from_parts(Poly::from_terms(std::move(terms)), d);
    }
    throw PreconditionError("leading coefficients are defined for delta and cos(phi) only");
}

namespace {

double coefficient_as(const Integer& k, double*) { return k.get_d(); }
Rational coefficient_as(const Integer& k, Rational*) { return Rational(k); }

template <class T, class Values>
T evaluate_numerator(const Poly& num, const Values& value)
{
    T total(0);
    for (const auto& t : num.terms()) {
        T term = coefficient_as(t.coef, static_cast<T*>(nullptr));
        int top = t.mono.highest_slot();
        for (int slot = 0; slot <= top; ++slot) {
            int e = t.mono.exponent(slot);
            if (e) term *= power<T>(value[slot], e);
        }
        total += term;
    }
    return total;
}

std::array<double, kSlotCount> slot_values(const Poly& num, const NumericProfile& p, int highest_order)
{
    std::array<double, kSlotCount> v{};
    v[kSlotCos] = std::cos(p.phi);
    v[kSlotSin] = std::sin(p.phi);
    v[kSlotRadius] = p.r;
    for (int order = 0; order <= highest_order; ++order) {
        for (int slot : {kappa_slot(order), tau_slot(order)}) {
            if (num.max_exponent(slot) == 0 && !(slot == kSlotKappa)) continue;
            v[slot] = p.value(symbol_of_slot(slot));
        }
    }
    return v;
}

void check_factor(double v, int exponent, const char* what)
{
    if (exponent > 0 && std::abs(v) < 1e-12)
        throw DivisionNearZero(std::string("denominator factor ") + what + " vanishes at the sample point");
}

} // namespace

double CanonForm::evaluate(const NumericProfile& p) const
{
    if (is_zero()) return 0.0;
    auto v = slot_values(num_, p, max_derivative_order());
    const double delta = 1.0 - v[kSlotRadius] * v[kSlotKappa] * v[kSlotCos];
    check_factor(delta, den_.delta, "delta");
    check_factor(v[kSlotCos], den_.cos, "cos(phi)");
    check_factor(v[kSlotKappa], den_.kappa, "kappa");
    check_factor(v[kSlotRadius], den_.radius, "r");
    double den = den_.constant.get_d() * power(delta, den_.delta) * power(v[kSlotCos], den_.cos) *
                 power(v[kSlotKappa], den_.kappa) * power(v[kSlotRadius], den_.radius);
    return evaluate_numerator<double>(num_, v) / den;
}

double CanonForm::magnitude(const NumericProfile& p) const
{
    if (is_zero()) return 0.0;
    auto v = slot_values(num_, p, max_derivative_order());
    std::array<double, kSlotCount> a{};
    for (int i = 0; i < kSlotCount; ++i) a[static_cast<std::size_t>(i)] = std::abs(v[static_cast<std::size_t>(i)]);
    double total = 0.0;
    for (const auto& t : num_.terms()) {
        double term = std::abs(t.coef.get_d());
        int top = t.mono.highest_slot();
        for (int slot = 0; slot <= top; ++slot)
            if (int e = t.mono.exponent(slot)) term *= power(a[slot], e);
        total += term;
    }
    const double delta = 1.0 - v[kSlotRadius] * v[kSlotKappa] * v[kSlotCos];
    double den = den_.constant.get_d() * power(std::abs(delta), den_.delta) * power(a[kSlotCos], den_.cos) *
                 power(a[kSlotKappa], den_.kappa) * power(a[kSlotRadius], den_.radius);
    return total / den;
}

Rational CanonForm::evaluate_exact(const ExactPoint& p) const
{
    if (is_zero()) return 0;
    std::array<Rational, kSlotCount> v{};
    v[kSlotCos] = p.cos;
    v[kSlotSin] = p.sin;
    v[kSlotRadius] = p.radius;
    const int top = max_derivative_order();
    for (int order = 0; order <= std::max(top, 0); ++order) {
        if (static_cast<std::size_t>(order) < p.kappa.size()) v[kappa_slot(order)] = p.kappa[order];
        else if (num_.max_exponent(kappa_slot(order)) > 0 || order == 0)
            throw MissingSymbol("exact point lacks " + Symbol::kappa(order).name());
        if (static_cast<std::size_t>(order) < p.tau.size()) v[tau_slot(order)] = p.tau[order];
        else if (num_.max_exponent(tau_slot(order)) > 0)
            throw MissingSymbol("exact point lacks " + Symbol::tau(order).name());
    }
    const Rational delta = 1 - v[kSlotRadius] * v[kSlotKappa] * v[kSlotCos];
    Rational den = Rational(den_.constant) * power(delta, den_.delta) * power(v[kSlotCos], den_.cos) *
                   power(v[kSlotKappa], den_.kappa) * power(v[kSlotRadius], den_.radius);
    if (den == 0) throw DivisionNearZero("denominator vanishes at the exact point");
    Rational r = evaluate_numerator<Rational>(num_, v) / den;
    r.canonicalize();
    return r;
}

int CanonForm::max_derivative_order() const
{
    int top = -1;
    for (const auto& t : num_.terms()) {
        int slot = t.mono.highest_slot();
        if (slot >= 3) top = std::max(top, (slot - 3) / 2);
    }
    return top;
}

std::string CanonForm::to_string(const Bindings& b) const
{
    if (is_zero()) return "0";
    auto [rest, j] = pull_delta(num_);

    // Substitute bindings into the numerator and fold the bound part of the
    // denominator into the coefficients.
    Rational scale(1, den_.constant);
    DenMonomial d = den_;
    if (b.radius) {
        scale /= power(*b.radius, d.radius);
        d.radius = 0;
    }
    if (b.kappa) {
        scale /= power(*b.kappa, d.kappa);
        d.kappa = 0;
    }
    std::map<Monomial, Rational> terms;
    for (const auto& t : rest.terms()) {
        Monomial m = t.mono;
        Rational k(t.coef);
        if (b.radius) {
            k *= power(*b.radius, m.exponent(kSlotRadius));
            m.set(kSlotRadius, 0);
        }
        if (b.kappa) {
            k *= power(*b.kappa, m.exponent(kSlotKappa));
            m.set(kSlotKappa, 0);
        }
        terms[m] += k * scale;
    }

    std::string num;
    int shown = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Rational k = it->second;
        k.canonicalize();
        if (k == 0) continue;
        const bool negative = k < 0;
        if (negative) k = -k;
        if (shown == 0)
            num += negative ? "-" : "";
        else
            num += negative ? " - " : " + ";
        std::string body;
        const Monomial& m = it->first;
        for (int slot = 0; slot < kSlotCount; ++slot) {
            if (int e = m.exponent(slot)) {
                if (!body.empty()) body += "*";
                body += power_string(symbol_of_slot(slot).name(), e);
            }
        }
        if (body.empty())
            num += chentype::to_string(k);
        else if (k == 1)
            num += body;
        else
            num += chentype::to_string(k) + "*" + body;
        ++shown;
    }
    if (shown == 0) return "0";

    std::vector<std::string> den;
    if (d.delta) den.push_back(power_string("delta", d.delta));
    if (d.cos) den.push_back(power_string("cos(phi)", d.cos));
    if (d.kappa) den.push_back(power_string("kappa", d.kappa));
    if (d.radius) den.push_back(power_string("r", d.radius));

    std::string out = num;
    const bool wrap = shown > 1 && (j > 0 || !den.empty());
    if (wrap) out = "(" + out + ")";
    if (j > 0) {
        const std::string dj = power_string("delta", j);
        if (wrap)
            out = dj + "*" + out;
        else if (out == "1")
            out = dj;
        else if (out == "-1")
            out = "-" + dj;
        else
            out += "*" + dj;
    }
    if (!den.empty()) {
        std::string ds;
        for (const auto& f : den) ds += (ds.empty() ? "" : "*") + f;
        out += den.size() > 1 ? "/(" + ds + ")" : "/" + ds;
    }
    return out;
}

} // namespace chentype

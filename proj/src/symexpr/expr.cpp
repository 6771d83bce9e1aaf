#include "chentype/symexpr/expr.hpp"

#include "chentype/errors.hpp"
#include "chentype/symexpr/profile.hpp"

#include <cmath>
#include <mutex>

namespace chentype {

struct Expr::Node {
    Kind kind = Kind::Constant;
    Rational value;
    Symbol atom;
    std::vector<Expr> operands;
    int exponent = 0;
    CanonForm form;
    mutable std::once_flag canon_once;
    mutable CanonForm canon;
};

namespace {

std::shared_ptr<Expr::Node> node(Expr::Kind k)
{
    auto n = std::make_shared<Expr::Node>();
    n->kind = k;
    return n;
}

const Rational kZero(0);

} // namespace

Expr::Expr() : Expr(0) {}

Expr::Expr(int value) : Expr(Rational(value)) {}

Expr::Expr(const Rational& value)
{
    auto n = node(Kind::Constant);
    n->value = value;
    n->value.canonicalize();
    node_ = std::move(n);
}

Expr::Expr(Symbol atom)
{
    if (atom.is_u_function() && (atom.order < 0 || atom.order > kMaxDerivativeOrder))
        throw Error("derivative order " + std::to_string(atom.order) + " outside the tracked range");
    auto n = node(Kind::Atom);
    n->atom = atom;
    node_ = std::move(n);
}

Expr Expr::canonical(CanonForm form)
{
    if (auto q = form.constant_value()) return Expr(*q);
    auto n = node(Kind::Canonical);
    n->form = std::move(form);
    return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::sum(std::vector<Expr> terms)
{
    std::vector<Expr> flat;
    Rational constant = 0;
    for (auto& t : terms) {
        if (t.kind() == Kind::Constant) {
            constant += t.constant();
        } else if (t.kind() == Kind::Sum) {
            for (const auto& s : t.operands()) {
                if (s.kind() == Kind::Constant)
                    constant += s.constant();
                else
                    flat.push_back(s);
            }
        } else {
            flat.push_back(std::move(t));
        }
    }
    if (constant != 0) flat.insert(flat.begin(), Expr(constant));
    if (flat.empty()) return Expr(0);
    if (flat.size() == 1) return flat[0];
    auto n = node(Kind::Sum);
    n->operands = std::move(flat);
    return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::product(std::vector<Expr> factors)
{
    std::vector<Expr> flat;
    Rational constant = 1;
    for (auto& f : factors) {
        if (f.kind() == Kind::Constant) {
            constant *= f.constant();
        } else if (f.kind() == Kind::Product) {
            for (const auto& s : f.operands()) {
                if (s.kind() == Kind::Constant)
                    constant *= s.constant();
                else
                    flat.push_back(s);
            }
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (constant == 0) return Expr(0);
    if (constant != 1) flat.insert(flat.begin(), Expr(constant));
    if (flat.empty()) return Expr(1);
    if (flat.size() == 1) return flat[0];
    auto n = node(Kind::Product);
    n->operands = std::move(flat);
    return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr Expr::power(const Expr& base, int exponent)
{
    if (exponent == 0) return Expr(1);
    if (exponent == 1) return base;
    if (base.kind() == Kind::Constant) {
        const Rational& q = base.constant();
        if (q == 0) {
            if (exponent < 0) throw DivisionNearZero("zero raised to a negative power");
            return Expr(0);
        }
        Rational r = 1;
        for (int i = 0; i < std::abs(exponent); ++i) r *= q;
        if (exponent < 0) r = 1 / r;
        return Expr(r);
    }
    if (base.kind() == Kind::Power) return power(base.base(), base.exponent() * exponent);
    auto n = node(Kind::Power);
    n->operands = {base};
    n->exponent = exponent;
    return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr::Kind Expr::kind() const { return node_->kind; }

const Rational& Expr::constant() const { return node_->kind == Kind::Constant ? node_->value : kZero; }

Symbol Expr::atom() const
{
    if (node_->kind != Kind::Atom) throw PreconditionError("expression is not an atom");
    return node_->atom;
}

const std::vector<Expr>& Expr::operands() const { return node_->operands; }

const Expr& Expr::base() const
{
    if (node_->kind != Kind::Power) throw PreconditionError("expression is not a power");
    return node_->operands[0];
}

int Expr::exponent() const { return node_->exponent; }

const CanonForm& Expr::canonical_form() const
{
    if (node_->kind != Kind::Canonical) throw PreconditionError("expression is not canonical");
    return node_->form;
}

bool Expr::is_constant(const Rational& q) const { return node_->kind == Kind::Constant && node_->value == q; }

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator-(const Expr& a) { return Expr::product({Expr(-1), a}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }

Expr operator/(const Expr& a, const Expr& b)
{
    if (b.kind() == Expr::Kind::Constant) {
        if (b.constant() == 0) throw DivisionNearZero("division by the constant zero");
        return a * Expr(Rational(1) / b.constant());
    }
    return a * Expr::power(b, -1);
}

Expr pow(const Expr& base, int exponent) { return Expr::power(base, exponent); }

Expr cos_phi() { return Expr(Symbol::cos_phi()); }
Expr sin_phi() { return Expr(Symbol::sin_phi()); }
Expr delta() { return Expr(Symbol::delta()); }
Expr radius() { return Expr(Symbol::radius()); }
Expr kappa(int order) { return Expr(Symbol::kappa(order)); }
Expr tau(int order) { return Expr(Symbol::tau(order)); }
Expr beta() { return kappa(1) * cos_phi() + kappa() * tau() * sin_phi(); }

namespace {

template <class D>
Expr diff_tree(const Expr& e, const D& atom_rule, CanonForm (*canon_rule)(const CanonForm&, const void*), const void* ctx)
{
    switch (e.kind()) {
    case Expr::Kind::Constant: return Expr(0);
    case Expr::Kind::Atom: return atom_rule(e.atom());
    case Expr::Kind::Canonical: return Expr::canonical(canon_rule(e.canonical_form(), ctx));
    case Expr::Kind::Sum: {
        std::vector<Expr> parts;
        for (const auto& t : e.operands()) parts.push_back(diff_tree(t, atom_rule, canon_rule, ctx));
        return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Product: {
        const auto& f = e.operands();
        std::vector<Expr> parts;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Expr d = diff_tree(f[i], atom_rule, canon_rule, ctx);
            if (d.is_constant(0)) continue;
            std::vector<Expr> prod = f;
            prod[i] = d;
            parts.push_back(Expr::product(std::move(prod)));
        }
        return Expr::sum(std::move(parts));
    }
    case Expr::Kind::Power: {
        const int n = e.exponent();
        return Expr(n) * pow(e.base(), n - 1) * diff_tree(e.base(), atom_rule, canon_rule, ctx);
    }
    }
    return Expr(0);
}

} // namespace

Expr diff_phi(const Expr& e)
{
    auto rule = [](Symbol s) -> Expr {
        switch (s.kind) {
        case SymbolKind::CosPhi: return -sin_phi();
        case SymbolKind::SinPhi: return cos_phi();
        case SymbolKind::Delta: return radius() * kappa() * sin_phi();
        default: return Expr(0);
        }
    };
    return diff_tree(e, rule, [](const CanonForm& f, const void*) { return f.diff_phi(); }, nullptr);
}

Expr diff_u(const Expr& e, const UDerivativeRules& rules)
{
    auto rule = [&rules](Symbol s) -> Expr {
        switch (s.kind) {
        case SymbolKind::Kappa:
            if (rules.kappa_constant) return Expr(0);
            return kappa(s.order + 1);
        case SymbolKind::Tau:
            if (rules.torsion_free) return Expr(0);
            return tau(s.order + 1);
        case SymbolKind::Delta:
            if (rules.kappa_constant) return Expr(0);
            return -(radius() * kappa(1) * cos_phi());
        default: return Expr(0);
        }
    };
    return diff_tree(
        e, rule, [](const CanonForm& f, const void* ctx) { return f.diff_u(*static_cast<const UDerivativeRules*>(ctx)); },
        &rules);
}

namespace {

CanonForm canonicalize_uncached(const Expr& e)
{
    switch (e.kind()) {
    case Expr::Kind::Constant: return CanonForm::constant(e.constant());
    case Expr::Kind::Atom: return CanonForm::symbol(e.atom());
    case Expr::Kind::Canonical: return e.canonical_form();
    case Expr::Kind::Sum: {
        CanonForm acc;
        for (const auto& t : e.operands()) acc = acc + canonicalize(t);
        return acc;
    }
    case Expr::Kind::Product: {
        CanonForm acc = CanonForm::constant(1);
        for (const auto& t : e.operands()) acc = acc * canonicalize(t);
        return acc;
    }
    case Expr::Kind::Power: return canonicalize(e.base()).pow(e.exponent());
    }
    return {};
}

} // namespace

CanonForm canonicalize(const Expr& e)
{
    if (e.kind() == Expr::Kind::Canonical) return e.canonical_form();
    if (e.kind() == Expr::Kind::Constant) return CanonForm::constant(e.constant());
    const auto* n = static_cast<const Expr::Node*>(e.identity());
    std::call_once(n->canon_once, [&] { n->canon = canonicalize_uncached(e); });
    return n->canon;
}

Expr simplify(const Expr& e) { return Expr::canonical(canonicalize(e)); }

Expr to_expr(const CanonForm& form)
{
    if (form.is_zero()) return Expr(0);
    std::vector<Expr> terms;
    for (const auto& t : form.numerator().terms()) {
        std::vector<Expr> factors{Expr(Rational(t.coef))};
        for (int slot = 0; slot < kSlotCount; ++slot)
            if (int k = t.mono.exponent(slot)) factors.push_back(pow(Expr(symbol_of_slot(slot)), k));
        terms.push_back(Expr::product(std::move(factors)));
    }
    const auto& d = form.denominator();
    std::vector<Expr> factors{Expr::sum(std::move(terms)), Expr(Rational(1, d.constant))};
    if (d.delta) factors.push_back(pow(delta(), -d.delta));
    if (d.cos) factors.push_back(pow(cos_phi(), -d.cos));
    if (d.kappa) factors.push_back(pow(kappa(), -d.kappa));
    if (d.radius) factors.push_back(pow(radius(), -d.radius));
    return Expr::product(std::move(factors));
}

double eval(const Expr& e, const NumericProfile& p)
{
    switch (e.kind()) {
    case Expr::Kind::Constant: return e.constant().get_d();
    case Expr::Kind::Atom: return p.value(e.atom());
    case Expr::Kind::Canonical: return e.canonical_form().evaluate(p);
    case Expr::Kind::Sum: {
        double s = 0.0;
        for (const auto& t : e.operands()) s += eval(t, p);
        return s;
    }
    case Expr::Kind::Product: {
        double s = 1.0;
        for (const auto& t : e.operands()) s *= eval(t, p);
        return s;
    }
    case Expr::Kind::Power: {
        double b = eval(e.base(), p);
        if (e.exponent() < 0 && std::abs(b) < 1e-300) throw DivisionNearZero("division by a vanishing subexpression");
        return std::pow(b, e.exponent());
    }
    }
    return 0.0;
}

double eval_magnitude(const Expr& e, const NumericProfile& p)
{
    switch (e.kind()) {
    case Expr::Kind::Constant: return std::abs(e.constant().get_d());
    case Expr::Kind::Atom: return std::abs(p.value(e.atom()));
    case Expr::Kind::Canonical: return e.canonical_form().magnitude(p);
    case Expr::Kind::Sum: {
        double s = 0.0;
        for (const auto& t : e.operands()) s += eval_magnitude(t, p);
        return s;
    }
    case Expr::Kind::Product: {
        double s = 1.0;
        for (const auto& t : e.operands()) s *= eval_magnitude(t, p);
        return s;
    }
    case Expr::Kind::Power: return std::pow(std::abs(eval(e.base(), p)), e.exponent());
    }
    return 0.0;
}

bool is_zero(const Expr& e)
{
    const bool exact = canonicalize(e).is_zero();
    Rng rng(0x5eedc0de);
    bool all_numeric_zero = true;
    for (int i = 0; i < 20; ++i) {
        NumericProfile p = random_profile(rng);
        const double v = eval(e, p);
        const double scale = eval_magnitude(e, p);
        const bool numeric_zero = std::abs(v) <= 1e-9 * scale;
        if (exact && !numeric_zero)
            throw ConsistencyError("canonical form is zero but the expression evaluates to " + std::to_string(v));
        all_numeric_zero = all_numeric_zero && numeric_zero;
    }
    if (!exact && all_numeric_zero)
        throw ConsistencyError("canonical form is nonzero but the expression vanishes at every sample");
    return exact;
}

int pole_order(const Expr& e, Symbol atom) { return canonicalize(e).pole_order(atom); }

LeadingTerm leading_term(const Expr& e, Symbol atom)
{
    CanonForm f = canonicalize(e);
    LeadingTerm t;
    t.order = f.pole_order(atom);
    t.coefficient = f.leading_coefficient(atom);
    t.term = Expr::canonical(t.coefficient) * pow(Expr(atom), -t.order);
    return t;
}

bool same_leading_term(const Expr& a, const Expr& b, Symbol atom)
{
    CanonForm fa = canonicalize(a);
    CanonForm fb = canonicalize(b);
    if (fa.pole_order(atom) != fb.pole_order(atom)) return false;
    return fa.leading_coefficient(atom) == fb.leading_coefficient(atom);
}

namespace {

enum Precedence { kSumLevel = 0, kProductLevel = 1, kPowerLevel = 2 };

std::string print(const Expr& e, int context)
{
    std::string s;
    int level = kPowerLevel + 1;
    switch (e.kind()) {
    case Expr::Kind::Constant: {
        const Rational& q = e.constant();
        s = to_string(q);
        if (q < 0 || q.get_den() != 1) level = kSumLevel;
        break;
    }
    case Expr::Kind::Atom: s = e.atom().name(); break;
    case Expr::Kind::Canonical:
        s = e.canonical_form().to_string();
        level = kSumLevel;
        break;
    case Expr::Kind::Sum: {
        bool first = true;
        for (const auto& t : e.operands()) {
            std::string ts = print(t, kSumLevel + 1);
            if (!first && t.kind() == Expr::Kind::Product && t.operands()[0].kind() == Expr::Kind::Constant &&
                t.operands()[0].constant() < 0) {
                ts = print(-t, kSumLevel + 1);
                s += " - " + ts;
            } else {
                s += first ? ts : " + " + ts;
            }
            first = false;
        }
        level = kSumLevel;
        break;
    }
    case Expr::Kind::Product: {
        const auto& f = e.operands();
        std::size_t start = 0;
        if (f[0].is_constant(-1)) {
            s = "-";
            start = 1;
        }
        for (std::size_t i = start; i < f.size(); ++i) {
            if (i > start) s += "*";
            s += print(f[i], kProductLevel + 1);
        }
        level = start == 1 ? kSumLevel : kProductLevel;
        break;
    }
    case Expr::Kind::Power: {
        const int n = e.exponent();
        s = print(e.base(), kPowerLevel + 1) + "^" + (n < 0 ? "(" + std::to_string(n) + ")" : std::to_string(n));
        level = kPowerLevel;
        break;
    }
    }
    return level < context ? "(" + s + ")" : s;
}

} // namespace

std::string to_string(const Expr& e) { return print(e, kSumLevel); }

} // namespace chentype

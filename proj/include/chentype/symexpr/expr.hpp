#pragma once

#include "chentype/symexpr/canon_form.hpp"
#include "chentype/symexpr/rational.hpp"
#include "chentype/symexpr/symbol.hpp"

#include <memory>
#include <string>
#include <vector>

namespace chentype {

struct NumericProfile;

/// Immutable scalar expression over cos(phi), sin(phi), delta, r and the
/// u-functions kappa, tau and their derivatives. Nodes are shared; copying an
/// Expr is cheap and the value is safe to share across threads.
///
/// Besides the usual constant/atom/sum/product/power nodes an Expr may wrap a
/// CanonForm directly; canonicalizing such a node is free, which keeps long
/// operator chains from re-expanding their intermediates.
class Expr {
public:
    enum class Kind { Constant, Atom, Sum, Product, Power, Canonical };

    Expr();
    Expr(int value);
    Expr(const Rational& value);
    Expr(Symbol atom);

    static Expr canonical(CanonForm form);
    static Expr sum(std::vector<Expr> terms);
    static Expr product(std::vector<Expr> factors);
    static Expr power(const Expr& base, int exponent);

    Kind kind() const;
    const Rational& constant() const;
    Symbol atom() const;
    const std::vector<Expr>& operands() const;
    const Expr& base() const;
    int exponent() const;
    const CanonForm& canonical_form() const;

    bool is_constant(const Rational& q) const;
    const void* identity() const { return node_.get(); }

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr pow(const Expr& base, int exponent);

Expr cos_phi();
Expr sin_phi();
Expr delta();
Expr radius();
Expr kappa(int order = 0);
Expr tau(int order = 0);
/// kappa' cos(phi) + kappa tau sin(phi).
Expr beta();

Expr diff_phi(const Expr& e);
Expr diff_u(const Expr& e, const UDerivativeRules& rules = {});

CanonForm canonicalize(const Expr& e);
/// canonicalize wrapped back into an Expr.
Expr simplify(const Expr& e);
/// Rebuilds a plain sum-of-products tree from a canonical form.
Expr to_expr(const CanonForm& form);

/// Exact zero test on the canonical numerator, cross-checked by evaluating the
/// tree at 20 seeded random profiles. Throws ConsistencyError when the two
/// disagree.
bool is_zero(const Expr& e);

double eval(const Expr& e, const NumericProfile& p);
/// Scale of the summands of e at p; |eval| is compared against it when a
/// floating zero is expected.
double eval_magnitude(const Expr& e, const NumericProfile& p);

int pole_order(const Expr& e, Symbol atom);

struct LeadingTerm {
    int order = 0;
    /// Free of the atom; see CanonForm::leading_coefficient.
    CanonForm coefficient;
    /// coefficient / atom^order.
    Expr term;
};

/// Dominant pole of e in atom (Delta or CosPhi).
LeadingTerm leading_term(const Expr& e, Symbol atom);

/// True when a - b has a strictly lower pole in atom than a and b share.
bool same_leading_term(const Expr& a, const Expr& b, Symbol atom);

std::string to_string(const Expr& e);

} // namespace chentype

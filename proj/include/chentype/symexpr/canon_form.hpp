#pragma once

#include "chentype/symexpr/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chentype {

struct NumericProfile;

/// How u-derivatives act on kappa and tau. Anchor rings use a constant
/// curvature and vanishing torsion.
struct UDerivativeRules {
    bool kappa_constant = false;
    bool torsion_free = false;
};

/// Denominator  constant * delta^a * cos(phi)^b * kappa^c * r^d.
struct DenMonomial {
    Integer constant{1};
    int delta = 0;
    int cos = 0;
    int kappa = 0;
    int radius = 0;

    friend bool operator==(const DenMonomial& a, const DenMonomial& b)
    {
        return a.constant == b.constant && a.delta == b.delta && a.cos == b.cos && a.kappa == b.kappa &&
               a.radius == b.radius;
    }
};

/// Optional rational values for r and kappa, used when printing or
/// evaluating a chart with fixed parameters.
struct Bindings {
    std::optional<Rational> radius;
    std::optional<Rational> kappa;
    bool empty() const { return !radius && !kappa; }
};

/// Exact point used to extract rational values of canonical forms. delta is
/// derived as 1 - r*kappa*cos.
struct ExactPoint {
    Rational cos, sin, radius;
    std::vector<Rational> kappa;
    std::vector<Rational> tau;
};

/// Normal form numerator / denominator:
///  - numerator is a polynomial with sin degree <= 1 and delta expanded,
///  - denominator is a monomial in delta, cos(phi), kappa, r with a positive
///    integer constant,
///  - no factor of delta, cos(phi), kappa, r or an integer is shared.
/// Two forms are equal exactly when the expressions they came from agree.
class CanonForm {
public:
    CanonForm() = default;

    static CanonForm constant(const Rational& q);
    static CanonForm symbol(Symbol s);
    /// Normalizes an arbitrary numerator / denominator pair.
    static CanonForm from_parts(Poly numerator, DenMonomial denominator);

    const Poly& numerator() const { return num_; }
    const DenMonomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    std::optional<Rational> constant_value() const;
    std::size_t term_count() const { return num_.size(); }

    CanonForm operator-() const;
    friend CanonForm operator+(const CanonForm& a, const CanonForm& b);
    friend CanonForm operator-(const CanonForm& a, const CanonForm& b);
    friend CanonForm operator*(const CanonForm& a, const CanonForm& b);
    /// Throws NonRationalStructure unless b is a monomial times a power of delta.
    friend CanonForm operator/(const CanonForm& a, const CanonForm& b);

    CanonForm inverse() const;
    CanonForm pow(int n) const;
    CanonForm scaled(const Rational& q) const;

    CanonForm diff_phi() const;
    CanonForm diff_u(const UDerivativeRules& rules = {}) const;

    /// Exponent of the atom in the denominator. Defined for Delta, CosPhi,
    /// Kappa and Radius.
    int pole_order(Symbol atom) const;

    /// Coefficient of the highest pole in `atom` (Delta or CosPhi), restricted
    /// to the pole locus: for Delta cos(phi) is replaced by 1/(r kappa), for
    /// CosPhi cos(phi) = 0 and delta = 1. The result is free of the atom and
    /// unique, so leading coefficients compare with ==.
    CanonForm leading_coefficient(Symbol atom) const;

    double evaluate(const NumericProfile& p) const;
    /// Sum of absolute term values over |denominator|; scale for zero tests.
    double magnitude(const NumericProfile& p) const;
    Rational evaluate_exact(const ExactPoint& p) const;

    /// Highest kappa/tau derivative order present, -1 if none.
    int max_derivative_order() const;

    /// Pretty form; delta factors are pulled out of the numerator. Bound
    /// values of r and kappa are substituted everywhere except inside delta,
    /// which keeps meaning 1 - r*kappa*cos(phi).
    std::string to_string(const Bindings& b = {}) const;

    friend bool operator==(const CanonForm& a, const CanonForm& b)
    {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }

private:
    CanonForm(Poly n, DenMonomial d) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    Poly num_;
    DenMonomial den_;
};

} // namespace chentype

#pragma once

#include "chentype/symexpr/canon_form.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace chentype {

/// Truncated bivariate Taylor polynomial in (du, dphi) of total degree
/// <= order. Differentiation lowers the order by one, so applying a second
/// order operator k times to a jet of order 2k leaves an exact value.
class Jet2 {
public:
    Jet2() = default;
    explicit Jet2(int order, double constant = 0.0);

    /// f(u0 + du) from its derivatives f^(k)(u0), k = 0..order.
    static Jet2 from_u_derivatives(int order, std::span<const double> derivatives);
    static Jet2 cos_phi(int order, double phi0);
    static Jet2 sin_phi(int order, double phi0);

    int order() const { return order_; }
    double value() const { return coef_.empty() ? 0.0 : coef_[0]; }
    double coefficient(int i, int j) const { return coef_[index(i, j)]; }
    double& coefficient(int i, int j) { return coef_[index(i, j)]; }

    Jet2 d_u() const;
    Jet2 d_phi() const;
    Jet2 truncated(int order) const;

    Jet2& operator+=(const Jet2& o);
    Jet2& operator-=(const Jet2& o);
    Jet2& operator*=(double k);
    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(Jet2 a, double k) { return a *= k; }
    friend Jet2 operator*(double k, Jet2 a) { return a *= k; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b);
    friend Jet2 operator/(const Jet2& a, const Jet2& b);
    Jet2 operator-() const;

private:
    static int index(int i, int j) { return (i + j) * (i + j + 1) / 2 + j; }
    int order_ = -1;
    std::vector<double> coef_;
};

/// Jets for every slot variable around one point.
struct JetEnv {
    Jet2 cos, sin, radius, delta;
    std::vector<Jet2> kappa;
    std::vector<Jet2> tau;
};

Jet2 evaluate(const CanonForm& form, const JetEnv& env);

} // namespace chentype

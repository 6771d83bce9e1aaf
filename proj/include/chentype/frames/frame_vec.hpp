#pragma once

#include "chentype/symexpr/expr.hpp"

#include <array>
#include <variant>

namespace chentype {

/// Curvature and torsion of the spine curve as expressions, together with the
/// rules diff_u must follow for them.
struct Spine {
    Expr kappa;
    Expr tau;
    UDerivativeRules rules;

    /// Arbitrary space curve: symbolic kappa(u), tau(u).
    static Spine general();
    /// Plane circle of radius 1/kappa: kappa constant, tau = 0.
    static Spine circle();
    /// Circle with kappa fixed to the number 1.
    static Spine unit_circle();
};

/// Vector field written in the moving frame {t, h, b} of the spine.
class FrameVec {
public:
    FrameVec() = default;
    FrameVec(Expr t, Expr h, Expr b) : c_{std::move(t), std::move(h), std::move(b)} {}

    static FrameVec unit_t() { return {1, 0, 0}; }
    static FrameVec unit_h() { return {0, 1, 0}; }
    static FrameVec unit_b() { return {0, 0, 1}; }

    const Expr& t() const { return c_[0]; }
    const Expr& h() const { return c_[1]; }
    const Expr& b() const { return c_[2]; }
    const Expr& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    FrameVec operator+(const FrameVec& o) const { return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]}; }
    FrameVec operator-(const FrameVec& o) const { return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]}; }
    FrameVec operator-() const { return {-c_[0], -c_[1], -c_[2]}; }

private:
    std::array<Expr, 3> c_{Expr(0), Expr(0), Expr(0)};
};

/// Vector field in a fixed orthonormal basis.
class AmbientVec {
public:
    AmbientVec() = default;
    AmbientVec(Expr x, Expr y, Expr z) : c_{std::move(x), std::move(y), std::move(z)} {}

    const Expr& x() const { return c_[0]; }
    const Expr& y() const { return c_[1]; }
    const Expr& z() const { return c_[2]; }
    const Expr& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    AmbientVec operator+(const AmbientVec& o) const { return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]}; }
    AmbientVec operator-(const AmbientVec& o) const { return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]}; }
    AmbientVec operator-() const { return {-c_[0], -c_[1], -c_[2]}; }

private:
    std::array<Expr, 3> c_{Expr(0), Expr(0), Expr(0)};
};

using Vec = std::variant<FrameVec, AmbientVec>;

/// Componentwise derivative plus the Frenet-Serret connection
/// t' = kappa h, h' = -kappa t + tau b, b' = -tau h.
FrameVec d_du(const FrameVec& v, const Spine& spine);
FrameVec d_dphi(const FrameVec& v);
AmbientVec d_du(const AmbientVec& v, const UDerivativeRules& rules = {});
AmbientVec d_dphi(const AmbientVec& v);

Expr dot(const FrameVec& a, const FrameVec& b);
Expr dot(const AmbientVec& a, const AmbientVec& b);
/// Right-handed: cross(t, h) = b.
FrameVec cross(const FrameVec& a, const FrameVec& b);
AmbientVec cross(const AmbientVec& a, const AmbientVec& b);
FrameVec scale(const Expr& e, const FrameVec& v);
AmbientVec scale(const Expr& e, const AmbientVec& v);

/// Variant forms; operands of different kinds raise MixedFrames.
Expr dot(const Vec& a, const Vec& b);
Vec cross(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Expr& e, const Vec& v);

/// Each component replaced by its canonical form.
FrameVec simplify(const FrameVec& v);
AmbientVec simplify(const AmbientVec& v);
Vec simplify(const Vec& v);

/// True when every component is identically zero.
bool is_zero(const FrameVec& v);
bool is_zero(const AmbientVec& v);
bool is_zero(const Vec& v);

const Expr& component(const Vec& v, int i);

} // namespace chentype

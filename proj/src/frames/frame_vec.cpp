#include "chentype/frames/frame_vec.hpp"

#include "chentype/errors.hpp"

namespace chentype {

Spine Spine::general() { return {chentype::kappa(), chentype::tau(), {}}; }

Spine Spine::circle() { return {chentype::kappa(), Expr(0), {true, true}}; }

Spine Spine::unit_circle() { return {Expr(1), Expr(0), {true, true}}; }

FrameVec d_du(const FrameVec& v, const Spine& s)
{
    const auto& r = s.rules;
    return {diff_u(v.t(), r) - s.kappa * v.h(), diff_u(v.h(), r) + s.kappa * v.t() - s.tau * v.b(),
            diff_u(v.b(), r) + s.tau * v.h()};
}

FrameVec d_dphi(const FrameVec& v) { return {diff_phi(v.t()), diff_phi(v.h()), diff_phi(v.b())}; }

AmbientVec d_du(const AmbientVec& v, const UDerivativeRules& rules)
{
    return {diff_u(v.x(), rules), diff_u(v.y(), rules), diff_u(v.z(), rules)};
}

AmbientVec d_dphi(const AmbientVec& v) { return {diff_phi(v.x()), diff_phi(v.y()), diff_phi(v.z())}; }

namespace {

template <class V>
Expr dot3(const V& a, const V& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class V>
V cross3(const V& a, const V& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

[[noreturn]] void mixed() { throw MixedFrames("operands live in different frames"); }

} // namespace

Expr dot(const FrameVec& a, const FrameVec& b) { return dot3(a, b); }
Expr dot(const AmbientVec& a, const AmbientVec& b) { return dot3(a, b); }
FrameVec cross(const FrameVec& a, const FrameVec& b) { return cross3(a, b); }
AmbientVec cross(const AmbientVec& a, const AmbientVec& b) { return cross3(a, b); }
FrameVec scale(const Expr& e, const FrameVec& v) { return {e * v.t(), e * v.h(), e * v.b()}; }
AmbientVec scale(const Expr& e, const AmbientVec& v) { return {e * v.x(), e * v.y(), e * v.z()}; }

Expr dot(const Vec& a, const Vec& b)
{
    if (a.index() != b.index()) mixed();
    if (auto* f = std::get_if<FrameVec>(&a)) return dot(*f, std::get<FrameVec>(b));
    return dot(std::get<AmbientVec>(a), std::get<AmbientVec>(b));
}

Vec cross(const Vec& a, const Vec& b)
{
    if (a.index() != b.index()) mixed();
    if (auto* f = std::get_if<FrameVec>(&a)) return cross(*f, std::get<FrameVec>(b));
    return cross(std::get<AmbientVec>(a), std::get<AmbientVec>(b));
}

Vec add(const Vec& a, const Vec& b)
{
    if (a.index() != b.index()) mixed();
    if (auto* f = std::get_if<FrameVec>(&a)) return *f + std::get<FrameVec>(b);
    return std::get<AmbientVec>(a) + std::get<AmbientVec>(b);
}

Vec scale(const Expr& e, const Vec& v)
{
    return std::visit([&](const auto& x) -> Vec { return scale(e, x); }, v);
}

FrameVec simplify(const FrameVec& v) { return {simplify(v.t()), simplify(v.h()), simplify(v.b())}; }
AmbientVec simplify(const AmbientVec& v) { return {simplify(v.x()), simplify(v.y()), simplify(v.z())}; }
Vec simplify(const Vec& v)
{
    return std::visit([](const auto& x) -> Vec { return simplify(x); }, v);
}

bool is_zero(const FrameVec& v) { return is_zero(v.t()) && is_zero(v.h()) && is_zero(v.b()); }
bool is_zero(const AmbientVec& v) { return is_zero(v.x()) && is_zero(v.y()) && is_zero(v.z()); }
bool is_zero(const Vec& v)
{
    return std::visit([](const auto& x) { return is_zero(x); }, v);
}

const Expr& component(const Vec& v, int i)
{
    return std::visit([i](const auto& x) -> const Expr& { return x[i]; }, v);
}

} // namespace chentype

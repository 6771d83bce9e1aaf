#include "chentype/geometry/forms.hpp"

#include "chentype/errors.hpp"

#include <cmath>
#include <numbers>

namespace chentype {

std::string to_string(FormKind k)
{
    switch (k) {
    case FormKind::I: return "I";
    case FormKind::II: return "II";
    case FormKind::III: return "III";
    }
    return "?";
}

FundForm::FundForm(FormKind which, Expr g11, Expr g12, Expr g22)
    : which_(which), g_{simplify(g11), simplify(g12), simplify(g22)}
{
    det_ = simplify(g_[0] * g_[2] - g_[1] * g_[1]);
    if (canonicalize(det_).is_zero()) throw DegenerateForm("form " + to_string(which) + " is degenerate");
    try {
        const CanonForm inv_det = canonicalize(det_).inverse();
        inv_ = {Expr::canonical(canonicalize(g_[2]) * inv_det), Expr::canonical(-(canonicalize(g_[1]) * inv_det)),
                Expr::canonical(canonicalize(g_[0]) * inv_det)};
    } catch (const NonRationalStructure&) {
        inv_.reset();
    }
}

const Expr& FundForm::inv(int i, int j) const
{
    if (!inv_) throw NonRationalStructure("form " + to_string(which_) + " has a non-monomial determinant");
    return (*inv_)[static_cast<std::size_t>(i + j)];
}

namespace {

FundForm gram(FormKind which, const Vec& a, const Vec& b)
{
    return FundForm(which, dot(a, a), dot(a, b), dot(b, b));
}

} // namespace

FundForm first_form(const SurfaceChart& s) { return gram(FormKind::I, tangent_u(s), tangent_phi(s)); }

Vec gauss_map(const SurfaceChart& s)
{
    switch (s.kind) {
    case SurfaceKind::Tube:
    case SurfaceKind::AnchorRing: return FrameVec(0, -cos_phi(), -sin_phi());
    case SurfaceKind::Sphere:
        if (s.orientation == Orientation::Inward) return FrameVec(0, cos_phi(), -sin_phi());
        return FrameVec(0, -cos_phi(), sin_phi());
    case SurfaceKind::Generic: break;
    }
    throw PreconditionError("generic charts have no closed-form normal; use numeric_forms");
}

FundForm second_form(const SurfaceChart& s)
{
    const Vec xu = tangent_u(s);
    const Vec xp = tangent_phi(s);
    const Vec n = gauss_map(s);
    return FundForm(FormKind::II, dot(d_du(s, xu), n), dot(d_dphi(s, xu), n), dot(d_dphi(s, xp), n));
}

FundForm third_form(const SurfaceChart& s)
{
    const Vec n = gauss_map(s);
    return gram(FormKind::III, simplify(d_du(s, n)), simplify(d_dphi(s, n)));
}

FundForm fundamental_form(const SurfaceChart& s, FormKind which)
{
    switch (which) {
    case FormKind::I: return first_form(s);
    case FormKind::II: return second_form(s);
    case FormKind::III: return third_form(s);
    }
    throw PreconditionError("unknown form");
}

NormalSign verify_normal_sign(const SurfaceChart& s)
{
    const Vec N = simplify(cross(tangent_u(s), tangent_phi(s)));
    const Vec n = gauss_map(s);
    const Expr w = simplify(dot(N, n));
    if (!is_zero(add(N, scale(-w, n)))) throw ConsistencyError("cross(x_u, x_phi) is not parallel to the normal");
    if (!is_zero(w * w - first_form(s).det())) throw ConsistencyError("|cross(x_u, x_phi)|^2 differs from det I");

    NormalSign out;
    const double pos = eval(w, s.at(0.4, 0.3));
    const double neg = eval(w, s.at(0.4, std::numbers::pi - 0.3));
    out.sign = pos > 0 ? 1 : -1;
    out.flips_with_cos = (pos > 0) != (neg > 0);
    const std::string sign = out.sign > 0 ? "+" : "-";
    out.description = "cross(x_u, x_phi) = " + sign + (out.flips_with_cos ? "sign(cos(phi))*" : "") + "sqrt(det I)*n";
    return out;
}

Curvatures curvatures(const SurfaceChart& s)
{
    const FundForm I = first_form(s);
    const FundForm II = second_form(s);
    Curvatures c;
    c.K = simplify(II.det() / I.det());
    c.H = simplify((I.g11() * II.g22() - 2 * I.g12() * II.g12() + I.g22() * II.g11()) / (2 * I.det()));
    return c;
}

Expr gauss_curvature(const SurfaceChart& s) { return curvatures(s).K; }

NumericForms numeric_forms(const SurfaceChart& s, const NumericProfile& p)
{
    const Vec xu = tangent_u(s);
    const Vec xp = tangent_phi(s);
    auto value = [&](const Vec& v) {
        return Vec3{eval(component(v, 0), p), eval(component(v, 1), p), eval(component(v, 2), p)};
    };
    auto dot3 = [](const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
    const Vec3 a = value(xu), b = value(xp);
    const Vec3 uu = value(d_du(s, xu)), up = value(d_dphi(s, xu)), pp = value(d_dphi(s, xp));
    Vec3 n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    const double len = std::sqrt(dot3(n, n));
    if (len < 1e-14) throw DegenerateForm("chart is singular at the sample point");
    for (auto& x : n) x /= len;

    NumericForms f;
    f.normal = n;
    f.first = {dot3(a, a), dot3(a, b), dot3(b, b)};
    f.second = {dot3(uu, n), dot3(up, n), dot3(pp, n)};
    const double detI = f.first[0] * f.first[2] - f.first[1] * f.first[1];
    const double detII = f.second[0] * f.second[2] - f.second[1] * f.second[1];
    f.gauss_curvature = detII / detI;
    f.mean_curvature =
        (f.first[0] * f.second[2] - 2 * f.first[1] * f.second[1] + f.first[2] * f.second[0]) / (2 * detI);
    return f;
}

} // namespace chentype

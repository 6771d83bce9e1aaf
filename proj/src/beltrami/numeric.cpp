#include "chentype/beltrami/numeric.hpp"

#include "chentype/errors.hpp"

#include <algorithm>
#include <cmath>

namespace chentype {

bool admissible(const SurfaceChart& s, SamplePoint p)
{
    if (std::abs(std::cos(p.phi)) < 0.05) return false;
    if (s.kind == SurfaceKind::Tube || s.kind == SurfaceKind::AnchorRing) return s.at(p.u, p.phi, 0).delta() >= 0.05;
    return true;
}

namespace {

void require_admissible(const SurfaceChart& s, SamplePoint p)
{
    if (!admissible(s, p))
        throw PreconditionError("sample point (u=" + std::to_string(p.u) + ", phi=" + std::to_string(p.phi) +
                                ") violates the domain guard");
}

Vec3 frame_components(const Vec& v, const NumericProfile& prof)
{
    return {eval(component(v, 0), prof), eval(component(v, 1), prof), eval(component(v, 2), prof)};
}

int max_order(const Vec& v)
{
    int m = -1;
    for (int i = 0; i < 3; ++i) m = std::max(m, canonicalize(component(v, i)).max_derivative_order());
    return m;
}

/// Jets of kappa^(i), tau^(i) for i = 0..top, each to the given order.
JetEnv make_env(const SurfaceChart& s, SamplePoint p, int order, int top)
{
    JetEnv env;
    env.cos = Jet2::cos_phi(order, p.phi);
    env.sin = Jet2::sin_phi(order, p.phi);
    env.radius = Jet2(order, s.radius_value());
    std::vector<double> dk(static_cast<std::size_t>(order) + 1), dt(dk.size());
    for (int i = 0; i <= std::max(top, 0); ++i) {
        for (int j = 0; j <= order; ++j) {
            dk[static_cast<std::size_t>(j)] = s.profile.kappa(i + j, p.u);
            dt[static_cast<std::size_t>(j)] = s.profile.tau(i + j, p.u);
        }
        env.kappa.push_back(Jet2::from_u_derivatives(order, dk));
        env.tau.push_back(Jet2::from_u_derivatives(order, dt));
    }
    env.delta = Jet2(order, 1.0) - env.radius * env.kappa[0] * env.cos;
    return env;
}

} // namespace

Vec3 global_value(const SurfaceChart& s, const Vec& v, SamplePoint p, bool spine_point)
{
    const Vec3 c = frame_components(v, s.at(p.u, p.phi));
    if (!std::holds_alternative<FrameVec>(v)) return c;
    const auto state = SpineCurve(s.profile).at(p.u);
    Vec3 out = SpineCurve::to_global(state, c);
    if (spine_point)
        for (int a = 0; a < 3; ++a) out[a] += state.position[a];
    return out;
}

std::vector<Vec3> numeric_iterates(const BeltramiOp& op, const Vec& v, SamplePoint p, int k, bool spine_point)
{
    if (k < 0) throw PreconditionError("iteration count must be non-negative");
    const SurfaceChart& s = op.chart();
    require_admissible(s, p);
    const int order = 2 * k;
    int top = max_order(v);
    for (int c = 0; c < 5; ++c)
        top = std::max(top, op.coefficient(static_cast<BeltramiOp::Coefficient>(c)).max_derivative_order());
    const JetEnv env = make_env(s, p, order, top);

    std::array<Jet2, 5> coef;
    for (int c = 0; c < 5; ++c) coef[static_cast<std::size_t>(c)] = evaluate(op.coefficient(static_cast<BeltramiOp::Coefficient>(c)), env);

    std::array<Jet2, 3> comp;
    for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] = evaluate(canonicalize(component(v, i)), env);

    // Field in the fixed frame at u0: sum of component jets times frame jets.
    const bool frame = std::holds_alternative<FrameVec>(v);
    std::array<Jet2, 3> field;
    if (frame) {
        const FrenetSeries series(s.profile, p.u, order);
        for (int a = 0; a < 3; ++a) {
            Jet2 x(order);
            for (int i = 0; i < 3; ++i) x += comp[static_cast<std::size_t>(i)] * series.jet(i, a, order);
            if (spine_point) x += series.jet(3, a, order);
            field[static_cast<std::size_t>(a)] = x;
        }
    } else {
        field = comp;
    }

    std::vector<Vec3> local;
    auto record = [&] { local.push_back({field[0].value(), field[1].value(), field[2].value()}); };
    record();
    for (int step = 0; step < k; ++step) {
        for (auto& f : field) {
            const Jet2 fu = f.d_u();
            const Jet2 fp = f.d_phi();
            f = coef[0] * fu.d_u() + coef[1] * fu.d_phi() + coef[2] * fp.d_phi() + coef[3] * fu + coef[4] * fp;
        }
        record();
    }

    if (!frame) return local;
    const auto state = SpineCurve(s.profile).at(p.u);
    std::vector<Vec3> out;
    for (std::size_t i = 0; i < local.size(); ++i) {
        Vec3 g = SpineCurve::to_global(state, local[i]);
        if (i == 0 && spine_point)
            for (int a = 0; a < 3; ++a) g[a] += state.position[a];
        out.push_back(g);
    }
    return out;
}

namespace {

struct FormAt {
    double sqrt_det;
    double inv11, inv12, inv22;
};

FormAt form_at(const BeltramiOp& op, double u, double phi)
{
    const NumericProfile prof = op.chart().at(u, phi);
    const double a = eval(op.form().g11(), prof), b = eval(op.form().g12(), prof), c = eval(op.form().g22(), prof);
    const double det = a * c - b * b;
    if (std::abs(det) < 1e-300) throw DivisionNearZero("form determinant vanishes at the sample point");
    return {std::sqrt(std::abs(det)), c / det, -b / det, a / det};
}

Vec3 axpy(const Vec3& x, double k, const Vec3& y)
{
    return {x[0] + k * y[0], x[1] + k * y[1], x[2] + k * y[2]};
}

Vec3 central(const Vec3& plus, const Vec3& minus, double h)
{
    return {(plus[0] - minus[0]) / (2 * h), (plus[1] - minus[1]) / (2 * h), (plus[2] - minus[2]) / (2 * h)};
}

} // namespace

Vec3 finite_difference_laplacian(const BeltramiOp& op, const Vec& v, SamplePoint p, bool spine_point, double h)
{
    const SurfaceChart& s = op.chart();
    require_admissible(s, p);
    auto G = [&](double u, double phi) { return global_value(s, v, {u, phi}, spine_point); };
    // W^j = sqrt|J| J^{ij} d_i G at (u, phi); `which` selects j.
    auto W = [&](double u, double phi, int which) {
        const FormAt f = form_at(op, u, phi);
        const Vec3 gu = central(G(u + h, phi), G(u - h, phi), h);
        const Vec3 gp = central(G(u, phi + h), G(u, phi - h), h);
        const double a = which == 0 ? f.inv11 : f.inv12;
        const double b = which == 0 ? f.inv12 : f.inv22;
        return axpy(Vec3{f.sqrt_det * a * gu[0], f.sqrt_det * a * gu[1], f.sqrt_det * a * gu[2]}, f.sqrt_det * b, gp);
    };
    const Vec3 du = central(W(p.u + h, p.phi, 0), W(p.u - h, p.phi, 0), h);
    const Vec3 dp = central(W(p.u, p.phi + h, 1), W(p.u, p.phi - h, 1), h);
    const double root = form_at(op, p.u, p.phi).sqrt_det;
    return {-(du[0] + dp[0]) / root, -(du[1] + dp[1]) / root, -(du[2] + dp[2]) / root};
}

Vec3 finite_difference_first(const BeltramiOp& op, const Expr& f, const Vec& g, SamplePoint p, bool spine_point,
                             double h)
{
    const SurfaceChart& s = op.chart();
    require_admissible(s, p);
    auto F = [&](double u, double phi) { return eval(f, s.at(u, phi)); };
    auto G = [&](double u, double phi) { return global_value(s, g, {u, phi}, spine_point); };
    const double fu = (F(p.u + h, p.phi) - F(p.u - h, p.phi)) / (2 * h);
    const double fp = (F(p.u, p.phi + h) - F(p.u, p.phi - h)) / (2 * h);
    const Vec3 gu = central(G(p.u + h, p.phi), G(p.u - h, p.phi), h);
    const Vec3 gp = central(G(p.u, p.phi + h), G(p.u, p.phi - h), h);
    const FormAt J = form_at(op, p.u, p.phi);
    const double wu = J.inv11 * fu + J.inv12 * fp;
    const double wp = J.inv12 * fu + J.inv22 * fp;
    return axpy(Vec3{wu * gu[0], wu * gu[1], wu * gu[2]}, wp, gp);
}

double relative_error(const Vec3& a, const Vec3& b, double floor)
{
    double diff = 0.0, scale = floor;
    for (int i = 0; i < 3; ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        scale = std::max(scale, std::abs(b[i]));
    }
    return diff / scale;
}

} // namespace chentype

#include "chentype/frames/numeric_frame.hpp"

#include <cmath>

namespace chentype {

FrenetSeries::FrenetSeries(const SpineProfile& spine, double u0, int order) : order_(order)
{
    std::vector<double> k(static_cast<std::size_t>(order) + 1), w(static_cast<std::size_t>(order) + 1);
    double factorial = 1.0;
    for (int i = 0; i <= order; ++i) {
        if (i > 0) factorial *= i;
        k[static_cast<std::size_t>(i)] = spine.kappa(i, u0) / factorial;
        w[static_cast<std::size_t>(i)] = spine.tau(i, u0) / factorial;
    }
    for (auto& c : coef_) c.assign(static_cast<std::size_t>(order) + 1, Vec3{});
    auto& T = coef_[0];
    auto& H = coef_[1];
    auto& B = coef_[2];
    auto& P = coef_[3];
    T[0] = {1, 0, 0};
    H[0] = {0, 1, 0};
    B[0] = {0, 0, 1};
    for (int n = 0; n < order; ++n) {
        Vec3 dt{}, dh{}, db{};
        for (int i = 0; i <= n; ++i) {
            const auto j = static_cast<std::size_t>(n - i);
            const double ki = k[static_cast<std::size_t>(i)];
            const double wi = w[static_cast<std::size_t>(i)];
            for (int a = 0; a < 3; ++a) {
                dt[a] += ki * H[j][a];
                dh[a] += -ki * T[j][a] + wi * B[j][a];
                db[a] += -wi * H[j][a];
            }
        }
        const auto next = static_cast<std::size_t>(n) + 1;
        for (int a = 0; a < 3; ++a) {
            T[next][a] = dt[a] / (n + 1);
            H[next][a] = dh[a] / (n + 1);
            B[next][a] = db[a] / (n + 1);
            P[next][a] = T[static_cast<std::size_t>(n)][a] / (n + 1);
        }
    }
}

Vec3 FrenetSeries::evaluate(int which, double du) const
{
    Vec3 out{};
    const auto& c = coef_[static_cast<std::size_t>(which)];
    for (int k = order_; k >= 0; --k)
        for (int a = 0; a < 3; ++a) out[a] = out[a] * du + c[static_cast<std::size_t>(k)][a];
    return out;
}

Jet2 FrenetSeries::jet(int which, int axis, int jet_order) const
{
    Jet2 j(jet_order);
    const auto& c = coef_[static_cast<std::size_t>(which)];
    for (int k = 0; k <= std::min(jet_order, order_); ++k) j.coefficient(k, 0) = c[static_cast<std::size_t>(k)][axis];
    return j;
}

SpineCurve::State SpineCurve::at(double u) const
{
    constexpr double max_step = 0.05;
    constexpr int series_order = 18;
    State s;
    s.frame = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
    const int steps = static_cast<int>(std::ceil(std::abs(u) / max_step));
    const double h = steps ? u / steps : 0.0;
    double at_u = 0.0;
    for (int i = 0; i < steps; ++i) {
        FrenetSeries series(spine_, at_u, series_order);
        State next;
        next.position = to_global(s, series.evaluate(3, h));
        for (int a = 0; a < 3; ++a) next.position[a] += s.position[a];
        for (int which = 0; which < 3; ++which) next.frame[which] = to_global(s, series.evaluate(which, h));
        s = next;
        at_u = (i + 1) * h;
    }
    return s;
}

Vec3 SpineCurve::to_global(const State& s, const Vec3& c)
{
    Vec3 out{};
    for (int which = 0; which < 3; ++which)
        for (int a = 0; a < 3; ++a) out[a] += c[which] * s.frame[which][a];
    return out;
}

} // namespace chentype

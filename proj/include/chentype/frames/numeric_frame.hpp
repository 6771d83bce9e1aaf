#pragma once

#include "chentype/symexpr/jet.hpp"
#include "chentype/symexpr/profile.hpp"

#include <array>
#include <vector>

namespace chentype {

using Vec3 = std::array<double, 3>;

/// Taylor expansion of the Frenet frame around u0, written in the frame at
/// u0 (so every series starts at a unit vector). Built from the curvature and
/// torsion derivatives by the Leibniz recurrence of the Frenet-Serret system.
class FrenetSeries {
public:
    FrenetSeries(const SpineProfile& spine, double u0, int order);

    int order() const { return order_; }
    /// k-th Taylor coefficient of t (which = 0), h (1), b (2) or the spine
    /// point relative to its value at u0 (3).
    const Vec3& coefficient(int which, int k) const { return coef_[static_cast<std::size_t>(which)][static_cast<std::size_t>(k)]; }
    Vec3 evaluate(int which, double du) const;
    /// Component `axis` of series `which` as a jet in du.
    Jet2 jet(int which, int axis, int jet_order) const;

private:
    int order_;
    std::array<std::vector<Vec3>, 4> coef_;
};

/// Spine curve in global coordinates: the Frenet-Serret system integrated
/// from u = 0, where the frame is the identity and the curve passes through
/// the origin. Integration uses Taylor steps of FrenetSeries.
class SpineCurve {
public:
    struct State {
        Vec3 position{};
        /// frame[0] = t, frame[1] = h, frame[2] = b in global coordinates.
        std::array<Vec3, 3> frame{};
    };

    explicit SpineCurve(SpineProfile spine) : spine_(spine) {}

    const SpineProfile& profile() const { return spine_; }
    State at(double u) const;

    /// Global coordinates of a vector with frame components (a_t, a_h, a_b).
    static Vec3 to_global(const State& s, const Vec3& frame_components);

private:
    SpineProfile spine_;
};

} // namespace chentype

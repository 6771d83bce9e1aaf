#include "chentype/frames.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace chentype;

namespace {

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross3(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

} // namespace

TEST_CASE("Frenet-Serret derivatives of the frame")
{
    const Spine spine = Spine::general();
    const FrameVec dt = d_du(FrameVec::unit_t(), spine);
    const FrameVec dh = d_du(FrameVec::unit_h(), spine);
    const FrameVec db = d_du(FrameVec::unit_b(), spine);
    CHECK(is_zero(dt - FrameVec(0, kappa(), 0)));
    CHECK(is_zero(dh - FrameVec(-kappa(), 0, tau())));
    CHECK(is_zero(db - FrameVec(0, -tau(), 0)));
}

TEST_CASE("the anchor ring spine has no torsion")
{
    const Spine spine = Spine::circle();
    CHECK(is_zero(d_du(FrameVec::unit_b(), spine)));
    CHECK(is_zero(d_du(FrameVec::unit_h(), spine) - FrameVec(-kappa(), 0, 0)));
}

TEST_CASE("frame products")
{
    CHECK(is_zero(cross(FrameVec::unit_t(), FrameVec::unit_h()) - FrameVec::unit_b()));
    CHECK(is_zero(cross(FrameVec::unit_h(), FrameVec::unit_b()) - FrameVec::unit_t()));
    CHECK(is_zero(dot(FrameVec(cos_phi(), sin_phi(), 0), FrameVec(cos_phi(), sin_phi(), 0)) - 1));
}

TEST_CASE("frame and ambient vectors do not mix")
{
    const Vec a = FrameVec::unit_t();
    const Vec b = AmbientVec(1, 0, 0);
    CHECK_THROWS_AS(dot(a, b), MixedFrames);
    CHECK_THROWS_AS(add(a, b), MixedFrames);
}

TEST_CASE("property: d/du obeys the product rule for dot products")
{
    test::ExprGen gen(41);
    const Spine spine = Spine::general();
    for (int i = 0; i < 15; ++i) {
        const FrameVec a = gen.frame_vec(2), b = gen.frame_vec(2);
        const Expr lhs = diff_u(dot(a, b), spine.rules);
        const Expr rhs = dot(d_du(a, spine), b) + dot(a, d_du(b, spine));
        CHECK(is_zero(lhs - rhs));
    }
}

TEST_CASE("property: the integrated frame stays orthonormal and right-handed")
{
    const SpineCurve curve(SpineProfile::default_profile());
    for (double u : {0.0, 0.7, 1.9, 3.0}) {
        const auto st = curve.at(u);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(dot3(st.frame[static_cast<std::size_t>(i)], st.frame[static_cast<std::size_t>(j)]) ==
                      doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
        const Vec3 b = cross3(st.frame[0], st.frame[1]);
        for (int a = 0; a < 3; ++a) CHECK(b[static_cast<std::size_t>(a)] == doctest::Approx(st.frame[2][static_cast<std::size_t>(a)]).epsilon(1e-10));
    }
}

TEST_CASE("the integrated circle closes after one period")
{
    const double k = 2.0;
    const SpineCurve curve(SpineProfile::circle(k));
    const auto st = curve.at(2 * std::acos(-1.0) / k);
    for (double x : st.position) CHECK(std::abs(x) < 1e-9);
}

TEST_CASE("Frenet series derivative equals curvature times principal normal")
{
    const SpineProfile p = SpineProfile::default_profile();
    const FrenetSeries series(p, 0.4, 6);
    // t'(u0) = kappa(u0) h(u0) and h(u0) = e_2 in the frame at u0.
    const Vec3& t1 = series.coefficient(0, 1);
    CHECK(t1[0] == doctest::Approx(0.0));
    CHECK(t1[1] == doctest::Approx(p.kappa(0, 0.4)));
    CHECK(t1[2] == doctest::Approx(0.0));
    const Vec3& b1 = series.coefficient(2, 1);
    CHECK(b1[1] == doctest::Approx(-p.tau(0, 0.4)));
}

#include "chentype/errors.hpp"
#include "chentype/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chentype;

namespace {

bool equal(const Expr& a, const Expr& b) { return is_zero(a - b); }

const Expr c = cos_phi(), s = sin_phi(), d = delta(), r = radius(), k = kappa(), t = tau();

} // namespace

TEST_CASE("tube first fundamental form")
{
    const FundForm I = first_form(make_tube());
    CHECK(equal(I.g11(), d * d + r * r * t * t));
    CHECK(equal(I.g12(), r * r * t));
    CHECK(equal(I.g22(), r * r));
    CHECK(equal(I.det(), r * r * d * d));
}

TEST_CASE("tube second fundamental form")
{
    const FundForm II = second_form(make_tube());
    CHECK(equal(II.g11(), r * t * t - k * c * d));
    CHECK(equal(II.g12(), r * t));
    CHECK(equal(II.g22(), r));
}

TEST_CASE("Gauss curvature of the tube")
{
    const SurfaceChart tube = make_tube();
    CHECK(equal(gauss_curvature(tube), -k * c / (r * d)));
    NumericProfile p;
    p.r = 0.5;
    p.phi = std::numbers::pi / 3;
    p.kappa.assign(kMaxDerivativeOrder + 1, 0.0);
    p.tau.assign(kMaxDerivativeOrder + 1, 0.0);
    p.kappa[0] = 1.0;
    CHECK(std::abs(eval(gauss_curvature(tube), p) - (-4.0 / 3.0)) < 1e-12);
}

TEST_CASE("sphere curvatures")
{
    CHECK(equal(gauss_curvature(make_sphere()), 1 / (r * r)));
    const SurfaceChart two = make_sphere(Rational(2));
    CHECK(canonicalize(gauss_curvature(two)).to_string(two.params) == "1/4");
}

TEST_CASE("anchor ring forms with bound parameters")
{
    const SurfaceChart ring = make_anchor_ring(Rational(1), Rational(1, 2));
    const FundForm I = first_form(ring);
    CHECK(equal(I.g11(), d * d));
    CHECK(is_zero(I.g12()));
    CHECK(canonicalize(I.g22()).to_string(ring.params) == "1/4");
    const FundForm II = second_form(ring);
    CHECK(equal(II.g11(), -k * c * d));
    CHECK(equal(II.g22(), r));
}

TEST_CASE("classical identity III = 2H II - K I")
{
    for (const SurfaceChart& chart : {make_tube(), make_sphere(), make_anchor_ring()}) {
        const FundForm I = first_form(chart), II = second_form(chart), III = third_form(chart);
        const Curvatures cv = curvatures(chart);
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) CHECK(equal(III(i, j), 2 * cv.H * II(i, j) - cv.K * I(i, j)));
    }
}

TEST_CASE("the Gauss map is a unit normal")
{
    for (const SurfaceChart& chart : {make_tube(), make_sphere(), make_anchor_ring()}) {
        const Vec n = gauss_map(chart);
        CHECK(is_zero(dot(n, n) - 1));
        CHECK(is_zero(dot(n, tangent_u(chart))));
        CHECK(is_zero(dot(n, tangent_phi(chart))));
    }
}

TEST_CASE("normal sign conventions")
{
    const NormalSign tube = verify_normal_sign(make_tube());
    CHECK(tube.sign == 1);
    CHECK_FALSE(tube.flips_with_cos);
    const NormalSign sphere = verify_normal_sign(make_sphere());
    CHECK(sphere.flips_with_cos);
}

TEST_CASE("numeric forms agree with the symbolic ones")
{
    const SurfaceChart tube = make_tube(Rational(1, 5));
    const FundForm I = first_form(tube), II = second_form(tube);
    for (double phi : {0.3, 1.2, 2.2, 2.9}) {
        const NumericProfile p = tube.at(0.8, phi);
        const NumericForms f = numeric_forms(tube, p);
        CHECK(f.first[0] == doctest::Approx(eval(I.g11(), p)).epsilon(1e-10));
        CHECK(f.first[2] == doctest::Approx(eval(I.g22(), p)).epsilon(1e-10));
        CHECK(f.second[0] == doctest::Approx(eval(II.g11(), p)).epsilon(1e-10));
        CHECK(f.second[1] == doctest::Approx(eval(II.g12(), p)).epsilon(1e-10));
        CHECK(f.gauss_curvature == doctest::Approx(eval(gauss_curvature(tube), p)).epsilon(1e-10));
    }
}

TEST_CASE("chart documents")
{
    const SurfaceChart ring = load_chart("kind = anchor-ring\nkappa = 1\nr = 0.5  # exact decimal\n");
    CHECK(ring.kind == SurfaceKind::AnchorRing);
    CHECK(*ring.params.radius == Rational(1, 2));
    const SurfaceChart tube = load_chart("kind = tube\nprofile = helix:1,1/2\n");
    CHECK(tube.profile.kind() == SpineProfile::Kind::Helix);
    CHECK_THROWS_AS(load_chart("r = 1"), ParseError);
    CHECK_THROWS_AS(load_chart("kind = torus"), ParseError);
    CHECK_THROWS_AS(load_chart("kind = tube\ncolour = red"), ParseError);
    CHECK_THROWS_AS(load_chart("kind = sphere\nradius = -1"), ParseError);
    CHECK_THROWS_AS(load_chart("kind = tube\nr = 1\nr = 2"), ParseError);
}

TEST_CASE("a chart without u dependence is degenerate")
{
    const SurfaceChart plane = make_generic(AmbientVec(cos_phi(), sin_phi(), 0));
    CHECK_THROWS_AS(first_form(plane), DegenerateForm);
}

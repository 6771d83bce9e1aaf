#include "chentype/beltrami/explicit.hpp"
#include "chentype/beltrami/numeric.hpp"
#include "chentype/errors.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace chentype;

namespace {

const Expr c = cos_phi(), s = sin_phi(), d = delta(), r = radius(), k = kappa();

std::vector<Expr> test_scalars() { return {Expr(1), kappa(), c, s, 1 / d, kappa() * c, s / (d * c)}; }

} // namespace

TEST_CASE("constants are annihilated")
{
    for (FormKind j : {FormKind::I, FormKind::II, FormKind::III}) {
        const BeltramiOp op(make_tube(), j);
        CHECK(is_zero(laplacian(op, Expr(Rational(7, 3)))));
    }
}

TEST_CASE("expanded and divergence paths agree on the test scalars")
{
    for (const SurfaceChart& chart : {make_tube(), make_anchor_ring(), make_sphere()})
        for (FormKind j : {FormKind::I, FormKind::II, FormKind::III}) {
            const BeltramiOp op(chart, j);
            for (const Expr& f : test_scalars()) CHECK(is_zero(op.apply(f) - op.apply_direct(f)));
        }
}

TEST_CASE("expanded and divergence paths agree on vector fields")
{
    const BeltramiOp op(make_tube(), FormKind::II);
    const SurfaceChart& chart = op.chart();
    CHECK(is_zero(add(op.apply(gauss_map(chart)), scale(Expr(-1), op.apply_direct(gauss_map(chart))))));
    CHECK(is_zero(add(op.apply(chart.offset, true), scale(Expr(-1), op.apply_direct(chart.offset, true)))));
}

TEST_CASE("hand-written tube operator equals the engine expansion")
{
    const BeltramiOp op(make_tube(), FormKind::II);
    for (const auto& diff : compare_coefficients(op, tube_display_operator())) {
        INFO(diff.name);
        CHECK(diff.equal);
    }
    const BeltramiOp ring(make_anchor_ring(), FormKind::II);
    for (const auto& diff : compare_coefficients(ring, ring_display_operator())) {
        INFO(diff.name);
        CHECK(diff.equal);
    }
}

TEST_CASE("property: the operator is linear")
{
    test::ExprGen gen(5);
    const BeltramiOp op(make_tube(), FormKind::II);
    for (int i = 0; i < 10; ++i) {
        const Expr f = gen.expr(2), g = gen.expr(2);
        const Expr a = Expr(Rational(static_cast<long>(gen.pick(7)) - 3, 2));
        CHECK(is_zero(laplacian(op, a * f + g) - a * laplacian(op, f) - laplacian(op, g)));
    }
}

TEST_CASE("property: product rule with the first operator")
{
    // Delta (f g) = f Delta g + g Delta f - 2 grad(f, g) for Delta = -div grad.
    test::ExprGen gen(9);
    for (FormKind j : {FormKind::I, FormKind::II}) {
        const BeltramiOp op(make_tube(), j);
        for (int i = 0; i < 8; ++i) {
            const Expr f = gen.expr(2), g = gen.expr(2);
            const Expr lhs = laplacian(op, f * g);
            const Expr rhs = f * laplacian(op, g) + g * laplacian(op, f) - 2 * first_beltrami(op, f, g);
            CHECK(is_zero(lhs - rhs));
            CHECK(is_zero(first_beltrami(op, f, g) - first_beltrami(op, g, f)));
        }
    }
}

TEST_CASE("property: symbolic, jet and finite difference values agree")
{
    Rng rng(17);
    for (const SurfaceChart& chart : {make_tube(Rational(1, 5)), make_anchor_ring(Rational(1), Rational(1, 3))}) {
        const BeltramiOp op(chart, FormKind::II);
        const Vec n = gauss_map(chart);
        const Vec dn = laplacian_vec(op, n);
        for (int i = 0; i < 6; ++i) {
            SamplePoint p{rng.uniform(0.0, 3.0), 0.0};
            do p.phi = rng.uniform(0.1, 3.0); while (!admissible(chart, p));
            const Vec3 sym = global_value(chart, dn, p);
            const auto jets = numeric_iterates(op, n, p, 1);
            const Vec3 fd = finite_difference_laplacian(op, n, p);
            CHECK(relative_error(jets[1], sym) < 1e-10);
            CHECK(relative_error(fd, sym) < 1e-6);
        }
    }
}

TEST_CASE("second iterate from jets matches the symbolic iterate")
{
    const SurfaceChart tube = make_tube(Rational(1, 5));
    const BeltramiOp op(tube, FormKind::II);
    const auto it = iterate(op, gauss_map(tube), 2);
    for (SamplePoint p : {SamplePoint{0.4, 0.7}, SamplePoint{2.1, 2.5}}) {
        const auto jets = numeric_iterates(op, gauss_map(tube), p, 2);
        CHECK(relative_error(jets[2], global_value(tube, it[1], p)) < 1e-9);
    }
}

TEST_CASE("sphere position and Gauss map are eigenvectors")
{
    const SurfaceChart sphere = make_sphere();
    const BeltramiOp op(sphere, FormKind::II);
    const Vec rel = add(sphere.offset, scale(Expr(-1), sphere_center_offset(sphere)));
    CHECK(is_zero(add(laplacian_vec(op, sphere.offset, true), scale(-2 / r, rel))));
    const Vec n = gauss_map(sphere);
    CHECK(is_zero(add(laplacian_vec(op, n), scale(-2 / r, n))));
}

TEST_CASE("Delta^I of the position is minus twice the mean curvature vector")
{
    const SurfaceChart tube = make_tube();
    const BeltramiOp op(tube, FormKind::I);
    const Curvatures cv = curvatures(tube);
    const Vec lhs = laplacian_vec(op, tube.offset, true);
    CHECK(is_zero(add(lhs, scale(2 * cv.H, gauss_map(tube)))));
}

TEST_CASE("iteration guards")
{
    const BeltramiOp op(make_tube(), FormKind::II);
    CHECK_THROWS_AS(iterate(op, gauss_map(op.chart()), 0), PreconditionError);
    CHECK_THROWS_AS(iterate(op, gauss_map(op.chart()), 3, 100), ExpressionBudgetExceeded);
    CHECK(iterate(op, gauss_map(op.chart()), 2).size() == 2);
}

TEST_CASE("a cylinder has no second-form operator")
{
    const SurfaceChart flat = make_generic(AmbientVec(kappa(), cos_phi(), sin_phi()));
    CHECK_THROWS(BeltramiOp(flat, FormKind::II));
}

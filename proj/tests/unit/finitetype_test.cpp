#include "chentype/errors.hpp"
#include "chentype/finitetype/claims.hpp"
#include "chentype/finitetype/evidence.hpp"

#include <doctest.h>

#include <cmath>

using namespace chentype;

// Constants under "oracle" come from tests/oracle/beltrami_oracle.py, an
// independent sympy computation with concrete curvature functions.

namespace {

const Expr c = cos_phi(), s = sin_phi(), d = delta(), r = radius(), k = kappa(), b = beta();

Rational top_multiple(const Expr& computed, const Expr& base, Symbol atom)
{
    const CanonForm f = canonicalize(computed), g = canonicalize(base);
    REQUIRE(f.pole_order(atom) == g.pole_order(atom));
    const auto q = proportionality(f.leading_coefficient(atom), g.leading_coefficient(atom));
    REQUIRE(q.has_value());
    return *q;
}

} // namespace

TEST_CASE("rank of a matrix with a duplicated column")
{
    Eigen::MatrixXd m(6, 3);
    m << 1, 2, 1, 0, 1, 0, 3, -1, 3, 2, 2, 2, 5, 0, 5, -1, 4, -1;
    CHECK(independence_rank(m) == 2);
    m(0, 2) = 1.5;
    CHECK(independence_rank(m) == 3);
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(6, 2);
    CHECK_THROWS_AS(independence_rank(zero), IllConditionedSamples);
    CHECK_THROWS_AS(independence_rank(m, 0.0), PreconditionError);
}

TEST_CASE("annihilator degree must be positive")
{
    const SurfaceChart sphere = make_sphere();
    Rng rng(1);
    const IterateMatrix m =
        build_iterate_matrix(BeltramiOp(sphere, FormKind::II), gauss_map(sphere), 2, sample_points(sphere, 12, rng));
    CHECK_THROWS_AS(annihilator_search(m, 0), PreconditionError);
    CHECK_THROWS_AS(annihilator_search(m, 3), PreconditionError);
    CHECK_THROWS_AS(type_evidence(sphere, 0, 1), PreconditionError);
}

TEST_CASE("the sphere Gauss map is annihilated at degree one")
{
    for (const auto& [radius_value, eigen] : {std::pair{Rational(1), 2.0}, std::pair{Rational(2), 1.0}}) {
        const SurfaceChart sphere = make_sphere(radius_value);
        Rng rng(3);
        const IterateMatrix m =
            build_iterate_matrix(BeltramiOp(sphere, FormKind::II), gauss_map(sphere), 1, sample_points(sphere, 20, rng));
        const Annihilator a = annihilator_search(m, 1);
        CHECK(a.residual < 1e-9);
        REQUIRE(a.eigenvalues.size() == 1);
        CHECK(std::abs(a.eigenvalues[0].real() - eigen) / eigen < 1e-8);
        CHECK(std::abs(a.eigenvalues[0].imag()) < 1e-12);
        CHECK(independence_rank(m, 1) == 1);
    }
}

TEST_CASE("sphere evidence is a type one candidate")
{
    const TypeEvidence e = type_evidence(make_sphere(), 3, 1);
    CHECK(describe(e) == "FiniteTypeCandidate(1)");
    CHECK(e.ranks == std::vector<int>{1, 1, 1});
}

TEST_CASE("anchor ring and tube show infinite type evidence")
{
    for (const SurfaceChart& chart : {default_chart(SurfaceKind::AnchorRing), default_chart(SurfaceKind::Tube)})
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const TypeEvidence e = type_evidence(chart, 5, seed);
            CHECK(describe(e) == "InfiniteTypeEvidence");
            CHECK(e.ranks == std::vector<int>{2, 3, 4, 5, 6});
            for (double res : e.residuals) CHECK(res >= 1e-2);
        }
}

TEST_CASE("property: rank is non-decreasing and at most K + 1")
{
    for (std::uint64_t seed = 10; seed < 14; ++seed)
        for (const SurfaceChart& chart : {default_chart(SurfaceKind::AnchorRing), default_chart(SurfaceKind::Sphere)}) {
            const TypeEvidence e = type_evidence(chart, 4, seed);
            for (std::size_t i = 0; i < e.ranks.size(); ++i) {
                CHECK(e.ranks[i] <= static_cast<int>(i) + 2);
                if (i > 0) CHECK(e.ranks[i] >= e.ranks[i - 1]);
            }
        }
}

TEST_CASE("property: evidence is reproducible from the seed")
{
    const TypeEvidence a = type_evidence(default_chart(SurfaceKind::Tube), 3, 8);
    const TypeEvidence b = type_evidence(default_chart(SurfaceKind::Tube), 3, 8);
    CHECK(a.residuals == b.residuals);
    CHECK(a.ranks == b.ranks);
}

TEST_CASE("anchor ring h-component poles grow by two per application")
{
    const auto records = pole_growth(make_anchor_ring(), 4);
    int previous = 0;
    for (const PoleRecord& rec : records) {
        if (rec.component != 1) continue;
        CHECK(rec.cos_order == 2 * rec.k - 1);
        CHECK(rec.delta_order == 2 * rec.k - 1);
        if (rec.k > 1) CHECK(rec.cos_order == previous + 2);
        previous = rec.cos_order;
    }
}

TEST_CASE("tube t-component pole orders")
{
    const auto records = pole_growth(make_tube(), 3);
    for (const PoleRecord& rec : records)
        if (rec.component == 0) {
            CHECK(rec.delta_order == 3 * rec.k - 1);
            CHECK(rec.cos_order == 3 * rec.k - 2);
        }
}

TEST_CASE("oracle: tube top coefficients h_k(0)")
{
    const BeltramiOp op(make_tube(), FormKind::II);
    const auto it = iterate(op, gauss_map(op.chart()), 3);
    const Rational want[] = {Rational(1), Rational(14), Rational(910)};
    for (int i = 1; i <= 3; ++i) {
        const Expr base = pow(b, 2 * i - 1) / (Expr(Rational(Integer(1) << i)) * pow(d, 3 * i - 1) * pow(k * c, 3 * i - 2));
        CHECK(top_multiple(component(it[static_cast<std::size_t>(i - 1)], 0), base, Symbol::delta()) == want[i - 1]);
    }
    // Relative to beta^5 / (kappa^7 delta^8 cos^7) the third iterate carries 455/4.
    const Expr base3 = pow(b, 5) / (pow(k, 7) * pow(d, 8) * pow(c, 7));
    CHECK(top_multiple(component(it[2], 0), base3, Symbol::delta()) == Rational(455, 4));
}

TEST_CASE("oracle: lemma case m = 1, n = 2, h = 1")
{
    const BeltramiOp op(make_tube(), FormKind::II);
    const Expr f = b / (pow(d, 2) * k * c);
    const Expr base = pow(b, 3) / (pow(d, 5) * pow(k * c, 4));
    CHECK(top_multiple(op.apply(f), base, Symbol::delta()) == Rational(7));
}

TEST_CASE("oracle: anchor ring recurrence coefficient is -n(2n+1)/2")
{
    const BeltramiOp op(make_anchor_ring(), FormKind::II);
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            const Expr f = pow(s, m) / pow(d * c, n);
            const Expr base = pow(s, m + 2) / (r * pow(d * c, n + 2));
            Rational want(-n * (2 * n + 1), 2);
            want.canonicalize();
            CHECK(top_multiple(op.apply(f), base, Symbol::cos_phi()) == want);
        }
}

TEST_CASE("oracle: anchor ring iterate coefficients")
{
    const BeltramiOp op(make_anchor_ring(), FormKind::II);
    const auto it = iterate(op, gauss_map(op.chart()), 4);
    const Rational want[] = {Rational(1, 2), Rational(-3, 4), Rational(63, 8), Rational(-3465, 16)};
    for (int i = 1; i <= 4; ++i) {
        const Expr base = pow(s, 2 * i) / (pow(r, i) * pow(d * c, 2 * i - 1));
        CHECK(top_multiple(component(it[static_cast<std::size_t>(i - 1)], 1), base, Symbol::cos_phi()) == want[i - 1]);
    }
}

TEST_CASE("proportionality")
{
    const CanonForm a = canonicalize(3 * s / (d * c)), bb = canonicalize(s / (d * c));
    CHECK(*proportionality(a, bb) == Rational(3));
    CHECK_FALSE(proportionality(canonicalize(s + c), bb).has_value());
}

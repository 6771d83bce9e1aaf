// Acceptance run: one line per criterion. A criterion that fails only because
// a displayed formula disagrees with the engine (a registry claim flagged as a
// known discrepancy) is printed as FAIL with the reason and does not change
// the exit status unless --strict is given.

#include "chentype/errors.hpp"
#include "chentype/finitetype/claims.hpp"
#include "chentype/finitetype/evidence.hpp"
#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

using namespace chentype;

namespace {

struct Outcome {
    bool hard = false;
    bool known = false;
    std::string note;

    bool pass() const { return !hard && !known; }
    void require(bool ok, const std::string& why)
    {
        if (ok) return;
        hard = true;
        add(why);
    }
    /// Failure traced to a display flagged as a known discrepancy.
    void known_failure(const std::string& why)
    {
        known = true;
        add(why);
    }
    void add(const std::string& why) { note += (note.empty() ? "" : "; ") + why; }
};

std::string detail(const ClaimReport& r, const std::string& key)
{
    for (const auto& [k, v] : r.details)
        if (k.find(key) != std::string::npos) return v;
    return {};
}

ClaimReport claim(const std::string& id, SurfaceKind kind) { return run_claim(id, default_chart(kind)); }

void expect_pass(Outcome& o, const ClaimReport& r)
{
    o.require(r.passed(), r.claim_id + " on " + r.surface + " is " + to_string(r.verdict));
}

Outcome tube_forms()
{
    Outcome o;
    expect_pass(o, claim("I-tube", SurfaceKind::Tube));
    expect_pass(o, claim("II-tube", SurfaceKind::Tube));
    return o;
}

Outcome gauss_curvature_check()
{
    Outcome o;
    expect_pass(o, claim("K-eq7", SurfaceKind::Tube));
    NumericProfile p;
    p.r = 0.5;
    p.phi = std::numbers::pi / 3;
    p.kappa.assign(kMaxDerivativeOrder + 1, 0.0);
    p.tau.assign(kMaxDerivativeOrder + 1, 0.0);
    p.kappa[0] = 1.0;
    const double value = eval(gauss_curvature(make_tube()), p);
    o.require(std::abs(value + 4.0 / 3.0) < 1e-12, "spot value " + std::to_string(value));
    return o;
}

Outcome first_iterate()
{
    Outcome o;
    ClaimOptions opt;
    opt.samples = 25;
    opt.tol = 1e-6;
    expect_pass(o, run_claim("dII-n-eq10", default_chart(SurfaceKind::Tube), opt));
    return o;
}

Outcome tube_leading_poles()
{
    Outcome o;
    const ClaimReport second = claim("dII2-n-eq12", SurfaceKind::Tube);
    expect_pass(o, second);
    const auto poles = pole_growth(make_tube(), 3);
    o.require(poles[3].delta_order == 5 && poles[3].cos_order == 4, "second iterate t orders");
    o.require(poles[6].delta_order == 8 && poles[6].cos_order == 7, "third iterate t orders");
    const ClaimReport third = claim("dII3-n-eq13", SurfaceKind::Tube);
    if (!third.passed()) {
        const std::string fix = detail(third, "9 delta - 5");
        if (third.known_discrepancy)
            o.known_failure("third iterate coefficient differs from the displayed product; " +
                            detail(third, "engine multiple") + " (with (9 delta - 5): " + fix + ")");
        else
            o.require(false, "dII3-n-eq13 is " + to_string(third.verdict));
    }
    return o;
}

Outcome ring_recurrence()
{
    Outcome o;
    const ClaimReport rec = claim("eq19", SurfaceKind::AnchorRing);
    const ClaimReport pow = claim("eq20-k", SurfaceKind::AnchorRing);
    for (const ClaimReport* r : {&rec, &pow}) {
        if (r->passed()) continue;
        if (r->known_discrepancy)
            o.known_failure(r->claim_id + " engine " + r->computed);
        else
            o.require(false, r->claim_id + " is " + to_string(r->verdict));
    }
    return o;
}

Outcome sphere_eigen()
{
    Outcome o;
    expect_pass(o, claim("sphere-T1", SurfaceKind::Sphere));
    expect_pass(o, claim("sphere-T2", SurfaceKind::Sphere));
    for (const Rational& radius_value : {Rational(1), Rational(2)}) {
        const SurfaceChart sphere = make_sphere(radius_value);
        Rng rng(1);
        const IterateMatrix m =
            build_iterate_matrix(BeltramiOp(sphere, FormKind::II), gauss_map(sphere), 1, sample_points(sphere, 20, rng));
        const Annihilator a = annihilator_search(m, 1);
        const double want = 2.0 / radius_value.get_d();
        o.require(a.residual < 1e-9, "annihilator residual " + std::to_string(a.residual));
        o.require(std::abs(a.eigenvalues[0].real() - want) / want < 1e-8, "eigenvalue " + std::to_string(a.eigenvalues[0].real()));
    }
    return o;
}

Outcome identity()
{
    Outcome o;
    for (SurfaceKind kind : {SurfaceKind::Sphere, SurfaceKind::Tube, SurfaceKind::AnchorRing})
        expect_pass(o, claim("identity-eq4", kind));
    return o;
}

Outcome infinite_type()
{
    Outcome o;
    for (SurfaceKind kind : {SurfaceKind::AnchorRing, SurfaceKind::Tube})
        for (std::uint64_t seed : {1u, 2u, 3u}) {
            const TypeEvidence e = type_evidence(default_chart(kind), 5, seed);
            const std::string where = to_string(kind) + " seed " + std::to_string(seed);
            for (std::size_t k = 0; k < e.ranks.size(); ++k) {
                o.require(e.ranks[k] == static_cast<int>(k) + 2, where + " rank at K=" + std::to_string(k + 1));
                o.require(e.residuals[k] >= 1e-2, where + " residual at K=" + std::to_string(k + 1));
            }
        }
    return o;
}

Outcome two_paths()
{
    Outcome o;
    const ClaimReport r = claim("op-eq8", SurfaceKind::Tube);
    if (r.verdict == Verdict::Mismatch)
        o.require(!detail(r, "engine").empty(), "mismatch without the engine coefficient");
    else
        expect_pass(o, r);
    return o;
}

Outcome determinism()
{
    Outcome o;
    auto capture = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        cli::run(args, out, err);
        return out.str();
    };
    for (const auto& args : {std::vector<std::string>{"verify", "--seed", "5"},
                             std::vector<std::string>{"finite-type", "--surface", "anchor-ring", "--seed", "5"},
                             std::vector<std::string>{"laplace", "--surface", "tube", "--k", "2"}}) {
        const std::string a = capture(args), b = capture(args);
        o.require(!a.empty() && a == b, "reports differ for " + args.front());
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    struct Criterion {
        int id;
        const char* title;
        double limit_s;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "tube fundamental forms", 1, tube_forms},
        {2, "Gauss curvature of the tube", 0, gauss_curvature_check},
        {3, "first iterate of the tube Gauss map", 10, first_iterate},
        {4, "leading poles of the second and third iterates", 60, tube_leading_poles},
        {5, "anchor ring recurrence and iterate leading terms", 60, ring_recurrence},
        {6, "sphere eigen relations", 0, sphere_eigen},
        {7, "identity for sphere, tube and anchor ring", 0, identity},
        {8, "infinite type evidence, 3 seeds", 120, infinite_type},
        {9, "two-path operator agreement", 0, two_paths},
        {10, "byte-identical reports", 0, determinism},
    };
    int hard_failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs > c.limit_s) o.require(false, "took " + std::to_string(secs) + " s");
        std::printf("criterion %2d %s: %s (%.3f s)%s%s\n", c.id, o.pass() ? "PASS" : "FAIL", c.title, secs,
                    o.note.empty() ? "" : " -- ", o.note.c_str());
        if (o.known && !o.hard) std::printf("             known discrepancy between a displayed formula and the engine\n");
        if (o.hard || (strict && o.known)) ++hard_failures;
    }
    return hard_failures == 0 ? 0 : 1;
}

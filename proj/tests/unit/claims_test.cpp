#include "chentype/errors.hpp"
#include "chentype/finitetype/claims.hpp"

#include <doctest.h>

#include <map>

using namespace chentype;

namespace {

std::map<std::string, ClaimReport> run_all(SurfaceKind kind)
{
    std::map<std::string, ClaimReport> out;
    for (auto& r : claim_registry_run(default_chart(kind))) out[r.claim_id] = r;
    return out;
}

bool has_detail(const ClaimReport& r, const std::string& key)
{
    for (const auto& [k, v] : r.details)
        if (k.find(key) != std::string::npos) return true;
    return false;
}

} // namespace

TEST_CASE("tube claims")
{
    const auto reports = run_all(SurfaceKind::Tube);
    for (const char* id : {"I-tube", "II-tube", "K-eq7", "op-eq8", "gaussmap-eq9", "dII-n-eq10", "dII2-n-eq12", "identity-eq4"}) {
        INFO(id);
        REQUIRE(reports.count(id) == 1);
        CHECK(reports.at(id).verdict == Verdict::Pass);
    }
}

TEST_CASE("tube displays that disagree with the engine")
{
    const auto reports = run_all(SurfaceKind::Tube);
    const ClaimReport& third = reports.at("dII3-n-eq13");
    CHECK(third.verdict == Verdict::Mismatch);
    CHECK(third.known_discrepancy);
    bool corrected = false;
    for (const auto& [k, v] : third.details)
        if (k.find("9 delta - 5") != std::string::npos) corrected = v == "leading term matches";
    CHECK(corrected);

    const ClaimReport& lemma = reports.at("lemma1");
    CHECK(lemma.verdict == Verdict::Mismatch);
    CHECK(has_detail(lemma, "engine h~(0)"));

    const ClaimReport& hl = reports.at("hlambda");
    CHECK(hl.verdict == Verdict::Mismatch);
    CHECK(hl.known_discrepancy);
}

TEST_CASE("anchor ring claims")
{
    const auto reports = run_all(SurfaceKind::AnchorRing);
    for (const char* id : {"I-ring", "II-ring", "op-eq17", "dII-n-eq16/18", "dII2-n-ring", "identity-eq4"}) {
        INFO(id);
        CHECK(reports.at(id).verdict == Verdict::Pass);
    }
    for (const char* id : {"eq19", "eq20-k"}) {
        INFO(id);
        CHECK(reports.at(id).verdict == Verdict::Mismatch);
        CHECK(reports.at(id).known_discrepancy);
    }
}

TEST_CASE("sphere claims")
{
    const auto reports = run_all(SurfaceKind::Sphere);
    for (const char* id : {"sphere-T1", "sphere-T2", "identity-eq4"}) CHECK(reports.at(id).verdict == Verdict::Pass);
}

TEST_CASE("every report carries an anchor and the claim id")
{
    for (SurfaceKind kind : {SurfaceKind::Tube, SurfaceKind::AnchorRing, SurfaceKind::Sphere})
        for (const auto& [id, r] : run_all(kind)) {
            CHECK_FALSE(r.anchor.empty());
            CHECK(r.claim_id == id);
            CHECK_FALSE(r.expected.empty());
        }
}

TEST_CASE("registry lookups")
{
    CHECK_THROWS_AS(claim_info("no-such"), PreconditionError);
    CHECK_THROWS_AS(run_claim("sphere-T1", default_chart(SurfaceKind::Tube)), PreconditionError);
    CHECK(claim_info("hlambda").known_discrepancy);
    CHECK_FALSE(claim_info("II-tube").known_discrepancy);
}

TEST_CASE("claims hold on a non-default tube radius")
{
    const SurfaceChart tube = make_tube(Rational(1, 3));
    for (const char* id : {"II-tube", "K-eq7", "dII-n-eq10"}) CHECK(run_claim(id, tube).passed());
}

TEST_CASE("identity on a sphere of radius 3 and a fat anchor ring")
{
    CHECK(identity_check(make_sphere(Rational(3))).passed());
    CHECK(identity_check(make_anchor_ring(Rational(2), Rational(1, 5))).passed());
}

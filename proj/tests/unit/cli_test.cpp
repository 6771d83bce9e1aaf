#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = chentype::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json results(const Run& r) { return json::parse(r.out)["results"]; }

} // namespace

TEST_CASE("forms of the tube")
{
    const Run r = cli({"forms", "--surface", "tube"});
    REQUIRE(r.code == 0);
    const json res = results(r);
    CHECK(res[1]["quantity"] == "II");
    CHECK(res[1]["g12"] == "r*tau");
    CHECK(res[1]["g22"] == "r");
    CHECK(res[3]["value"] == "-cos(phi)*kappa/(delta*r)");
}

TEST_CASE("forms with bound parameters")
{
    CHECK(results(cli({"forms", "--surface", "sphere", "--radius", "2"}))[3]["value"] == "1/4");
    const json ring = results(cli({"forms", "--surface", "anchor-ring", "--kappa", "1", "--r", "0.5"}));
    CHECK(ring[0]["g11"] == "delta^2");
    CHECK(ring[0]["g12"] == "0");
    CHECK(ring[0]["g22"] == "1/4");
}

TEST_CASE("laplace on the sphere position")
{
    const json res = results(cli({"laplace", "--surface", "sphere", "--target", "position", "--k", "1"}));
    CHECK(res[0]["multiple_of_target"] == "2/r");
}

TEST_CASE("laplace iterates report pole orders")
{
    const json res = results(cli({"laplace", "--surface", "anchor-ring", "--target", "gaussmap", "--k", "2"}));
    REQUIRE(res.size() == 2);
    CHECK(res[1]["pole_orders"]["h"]["cos"] == 3);
    CHECK(res[1]["components"]["t"] == "0");
}

TEST_CASE("budget overflow and numeric fallback")
{
    const Run over = cli({"laplace", "--surface", "tube", "--k", "3", "--budget", "50"});
    CHECK(over.code == 4);
    const Run numeric = cli({"laplace", "--surface", "tube", "--k", "3", "--budget", "50", "--numeric", "--samples", "3"});
    REQUIRE(numeric.code == 0);
    const json res = results(numeric);
    CHECK(res.size() == 3);
    CHECK(res[0]["mode"] == "numeric");
    CHECK(res[0]["iterates"].size() == 3);
}

TEST_CASE("verify exit codes")
{
    CHECK(cli({"verify", "--surface", "tube", "--claims", "II-tube,K-eq7"}).code == 0);
    CHECK(cli({"verify", "--surface", "sphere", "--claims", "sphere-T1,sphere-T2,identity-eq4"}).code == 0);
    CHECK(cli({"verify", "--claims", "no-such"}).code == 5);
    CHECK(cli({"verify", "--surface", "tube", "--claims", "sphere-T1"}).code == 3);
    // Known discrepancies fail only in strict mode.
    CHECK(cli({"verify", "--claims", "hlambda"}).code == 0);
    CHECK(cli({"verify", "--claims", "hlambda", "--strict"}).code == 1);
}

TEST_CASE("verify report schema")
{
    const json doc = json::parse(cli({"verify", "--surface", "tube", "--claims", "K-eq7", "--seed", "4"}).out);
    CHECK(doc["version"].is_string());
    CHECK(doc["seed"] == 4);
    CHECK(doc["config"]["chart"]["kind"] == "tube");
    const json& r = doc["results"][0];
    for (const char* key : {"claim_id", "verdict", "expected", "computed", "residuals", "anchor"}) CHECK(r.contains(key));
    CHECK(r["verdict"] == "PASS");
}

TEST_CASE("finite-type verdicts")
{
    CHECK(results(cli({"finite-type", "--surface", "sphere", "--k-max", "3"}))[0]["verdict"] == "FiniteTypeCandidate(1)");
    const json ring = results(cli({"finite-type", "--surface", "anchor-ring", "--k-max", "5"}))[0];
    CHECK(ring["verdict"] == "InfiniteTypeEvidence");
    CHECK(ring["ranks"] == json::array({2, 3, 4, 5, 6}));
    CHECK(ring["poles"].size() == 5);
    const json tube = results(cli({"finite-type", "--surface", "tube", "--k-max", "3", "--profile", "default"}))[0];
    CHECK(tube["verdict"] == "InfiniteTypeEvidence");
}

TEST_CASE("identical runs give identical bytes")
{
    const std::vector<std::string> args = {"finite-type", "--surface", "anchor-ring", "--k-max", "3", "--seed", "9"};
    CHECK(cli(args).out == cli(args).out);
    CHECK(cli({"verify", "--surface", "sphere"}).out == cli({"verify", "--surface", "sphere"}).out);
}

TEST_CASE("parse errors")
{
    CHECK(cli({"forms", "--surface", "torus"}).code == 3);
    CHECK(cli({"forms", "--surface", "tube", "--r", "abc"}).code == 3);
    CHECK(cli({"forms", "--surface", "sphere", "--r", "1"}).code == 3);
    CHECK(cli({"verify", "--tol", "-1"}).code == 3);
    CHECK(cli({}).code == 3);
    CHECK(cli({"forms", "--chart", "/nonexistent/chart.txt"}).code == 3);
}

TEST_CASE("chart documents and output formats")
{
    const std::string path = "cli_test_chart.txt";
    {
        std::ofstream f(path);
        f << "# fat ring\nkind = anchor-ring\nkappa = 1\nr = 1/2\n";
    }
    const Run r = cli({"forms", "--chart", path, "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("version,seed,quantity", 0) == 0);
    const Run t = cli({"list-claims", "--format", "text"});
    CHECK(t.out.find("claim_id: hlambda") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("environment overrides")
{
    setenv("CHENTYPE_SEED", "12", 1);
    CHECK(json::parse(cli({"list-surfaces"}).out)["seed"] == 12);
    CHECK(json::parse(cli({"list-surfaces", "--seed", "3"}).out)["seed"] == 3);
    unsetenv("CHENTYPE_SEED");
}

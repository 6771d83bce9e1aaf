#include "cli.hpp"

#include "chentype/errors.hpp"
#include "chentype/finitetype/claims.hpp"
#include "chentype/finitetype/evidence.hpp"
#include "chentype/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace chentype::cli {

namespace {

using json = nlohmann::ordered_json;

/// Everything a run depends on; echoed into every report.
struct RunConfig {
    std::string command;
    std::string surface;
    std::string chart_path;
    std::string r, kappa, radius, profile, orientation;
    std::string form = "II";
    std::string target = "gaussmap";
    int k = 1;
    int k_max = 5;
    std::string claims;
    std::uint64_t seed = 1;
    std::string format = "json";
    double tol = 1e-6;
    double rank_tol = 1e-8;
    /// 0 selects the command's own default.
    int samples = 0;
    bool numeric = false;
    bool strict = false;
    std::size_t budget = kDefaultTermBudget;
};

/// Claim id not in the registry.
struct UnknownClaim : Error {
    using Error::Error;
};

std::string chart_document(const RunConfig& c)
{
    if (!c.chart_path.empty()) {
        if (!c.surface.empty()) throw ParseError("--surface and --chart are mutually exclusive");
        std::ifstream in(c.chart_path);
        if (!in) throw ParseError("cannot read chart document '" + c.chart_path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    }
    std::string doc = "kind = " + (c.surface.empty() ? std::string("tube") : c.surface) + "\n";
    const std::pair<const char*, const std::string*> keys[] = {{"r", &c.r},
                                                               {"kappa", &c.kappa},
                                                               {"radius", &c.radius},
                                                               {"profile", &c.profile},
                                                               {"orientation", &c.orientation}};
    for (const auto& [key, value] : keys)
        if (!value->empty()) doc += std::string(key) + " = " + *value + "\n";
    return doc;
}

bool chart_selected(const RunConfig& c) { return !c.surface.empty() || !c.chart_path.empty(); }

FormKind parse_form(const std::string& s)
{
    if (s == "I") return FormKind::I;
    if (s == "II") return FormKind::II;
    if (s == "III") return FormKind::III;
    throw ParseError("form must be I, II or III");
}

std::string text(const Expr& e, const SurfaceChart& s) { return canonicalize(e).to_string(s.params); }

json number(double x)
{
    if (!std::isfinite(x)) return nullptr;
    return x;
}

json config_json(const RunConfig& c, int samples)
{
    json chart = json::object();
    if (!c.chart_path.empty()) {
        chart["path"] = c.chart_path;
    } else {
        chart["kind"] = c.surface.empty() ? "tube" : c.surface;
        if (!c.r.empty()) chart["r"] = c.r;
        if (!c.kappa.empty()) chart["kappa"] = c.kappa;
        if (!c.radius.empty()) chart["radius"] = c.radius;
        if (!c.profile.empty()) chart["profile"] = c.profile;
        if (!c.orientation.empty()) chart["orientation"] = c.orientation;
    }
    json j;
    j["command"] = c.command;
    j["chart"] = chart;
    j["form"] = c.form;
    if (c.command == "laplace") {
        j["target"] = c.target;
        j["k"] = c.k;
    }
    if (c.command == "finite-type") {
        j["k_max"] = c.k_max;
        j["rank_tol"] = c.rank_tol;
    }
    if (c.command == "verify") j["claims"] = c.claims;
    j["tol"] = c.tol;
    j["samples"] = samples;
    j["numeric"] = c.numeric;
    j["strict"] = c.strict;
    j["budget"] = c.budget;
    j["format"] = c.format;
    return j;
}

json report_json(const ClaimReport& r)
{
    json j;
    j["claim_id"] = r.claim_id;
    j["surface"] = r.surface;
    j["anchor"] = r.anchor;
    j["verdict"] = to_string(r.verdict);
    j["known_discrepancy"] = r.known_discrepancy;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    json details = json::array();
    for (const auto& [key, value] : r.details) details.push_back({{"key", key}, {"value", value}});
    j["details"] = details;
    json residuals = json::array();
    for (const auto& [key, value] : r.residuals) residuals.push_back({{"key", key}, {"value", number(value)}});
    j["residuals"] = residuals;
    return j;
}

const char* component_name(const Vec& v, int i)
{
    static const char* frame[] = {"t", "h", "b"};
    static const char* ambient[] = {"x", "y", "z"};
    return std::holds_alternative<FrameVec>(v) ? frame[i] : ambient[i];
}

// ---- commands ---------------------------------------------------------------

json cmd_forms(const SurfaceChart& s)
{
    json results = json::array();
    for (FormKind which : {FormKind::I, FormKind::II, FormKind::III}) {
        json j;
        j["quantity"] = to_string(which);
        try {
            const FundForm f = fundamental_form(s, which);
            j["g11"] = text(f.g11(), s);
            j["g12"] = text(f.g12(), s);
            j["g22"] = text(f.g22(), s);
            j["det"] = text(f.det(), s);
        } catch (const DegenerateForm&) {
            throw;
        } catch (const PreconditionError& e) {
            j["unavailable"] = e.what();
        }
        results.push_back(j);
    }
    try {
        const Curvatures c = curvatures(s);
        results.push_back({{"quantity", "K"}, {"value", text(c.K, s)}});
        results.push_back({{"quantity", "H"}, {"value", text(c.H, s)}});
    } catch (const PreconditionError& e) {
        results.push_back({{"quantity", "K"}, {"unavailable", e.what()}});
    }
    if (s.kind != SurfaceKind::Generic)
        results.push_back({{"quantity", "normal"}, {"value", verify_normal_sign(s).description}});
    return results;
}

/// Scalar q with v = q ref, when dot(ref, ref) is invertible in canonical form.
std::optional<Expr> multiple_of(const Vec& v, const Vec& ref)
{
    try {
        const Expr q = simplify(dot(v, ref) / dot(ref, ref));
        if (is_zero(add(v, scale(-q, ref)))) return q;
    } catch (const NonRationalStructure&) {
    }
    return std::nullopt;
}

json cmd_laplace(const RunConfig& c, const SurfaceChart& s, int samples)
{
    const BeltramiOp op(s, parse_form(c.form));
    Vec v;
    bool spine = false;
    std::optional<Vec> reference;
    if (c.target == "gaussmap") {
        v = gauss_map(s);
        reference = v;
    } else if (c.target == "position") {
        v = s.offset;
        spine = s.spine_point;
        if (s.kind == SurfaceKind::Sphere) reference = simplify(add(s.offset, scale(Expr(-1), sphere_center_offset(s))));
        if (!s.spine_point) reference = v;
    } else {
        throw ParseError("target must be position or gaussmap");
    }

    json results = json::array();
    try {
        const auto iterates = iterate(op, v, c.k, c.budget, spine);
        for (int i = 1; i <= c.k; ++i) {
            const Vec& w = iterates[static_cast<std::size_t>(i - 1)];
            json j;
            j["iterate"] = i;
            j["mode"] = "symbolic";
            json comps, orders;
            for (int a = 0; a < 3; ++a) {
                const CanonForm f = canonicalize(component(w, a));
                comps[component_name(w, a)] = f.to_string(s.params);
                orders[component_name(w, a)] =
                    f.is_zero() ? json(nullptr)
                                : json{{"delta", f.pole_order(Symbol::delta())}, {"cos", f.pole_order(Symbol::cos_phi())}};
            }
            j["components"] = comps;
            j["pole_orders"] = orders;
            j["terms"] = term_count(w);
            if (reference)
                if (auto q = multiple_of(w, *reference)) j["multiple_of_target"] = text(*q, s);
            results.push_back(j);
        }
        return results;
    } catch (const ExpressionBudgetExceeded&) {
        if (!c.numeric) throw;
    }

    Rng rng(c.seed);
    for (const SamplePoint& p : sample_points(s, samples, rng)) {
        const auto values = numeric_iterates(op, v, p, c.k, spine);
        json its = json::array();
        for (int i = 1; i <= c.k; ++i) {
            const Vec3& x = values[static_cast<std::size_t>(i)];
            its.push_back({number(x[0]), number(x[1]), number(x[2])});
        }
        results.push_back({{"mode", "numeric"}, {"u", p.u}, {"phi", p.phi}, {"iterates", its}});
    }
    return results;
}

std::vector<std::string> split_claims(const std::string& list)
{
    std::vector<std::string> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct VerifyOutcome {
    json results = json::array();
    bool ok = true;
};

VerifyOutcome cmd_verify(const RunConfig& c, int samples)
{
    const auto& catalog = claim_catalog();
    std::vector<std::string> ids = split_claims(c.claims);
    for (const auto& id : ids)
        if (std::none_of(catalog.begin(), catalog.end(), [&](const ClaimInfo& i) { return i.id == id; }))
            throw UnknownClaim("unknown claim id '" + id + "'");

    std::vector<std::pair<std::string, SurfaceChart>> plan;
    if (chart_selected(c)) {
        const SurfaceChart s = load_chart(chart_document(c));
        if (ids.empty()) {
            for (const auto& info : catalog)
                if (std::find(info.kinds.begin(), info.kinds.end(), s.kind) != info.kinds.end()) ids.push_back(info.id);
        }
        for (const auto& id : ids) plan.emplace_back(id, s);
    } else {
        if (ids.empty())
            for (const auto& info : catalog) ids.push_back(info.id);
        for (const auto& id : ids)
            for (SurfaceKind k : claim_info(id).kinds) plan.emplace_back(id, default_chart(k));
    }

    const ClaimOptions opt{c.seed, samples, c.tol, c.budget};
    VerifyOutcome out;
    for (const auto& [id, chart] : plan) {
        const ClaimReport r = run_claim(id, chart, opt);
        if (!r.passed() && (c.strict || !r.known_discrepancy)) out.ok = false;
        out.results.push_back(report_json(r));
    }
    return out;
}

json cmd_finite_type(const RunConfig& c, const SurfaceChart& s, int samples)
{
    const TypeEvidence e = type_evidence(s, c.k_max, c.seed, samples, c.rank_tol);
    json j;
    j["surface"] = to_string(s.kind);
    j["verdict"] = describe(e);
    j["ranks"] = e.ranks;
    json residuals = json::array();
    for (double r : e.residuals) residuals.push_back(number(r));
    j["residuals"] = residuals;
    json eig = json::array();
    for (const auto& roots : e.eigenvalues) {
        json row = json::array();
        for (const auto& z : roots) row.push_back({number(z.real()), number(z.imag())});
        eig.push_back(row);
    }
    j["eigenvalues"] = eig;
    j["annihilator_threshold"] = kAnnihilatorThreshold;
    j["points"] = e.points;

    if (s.kind == SurfaceKind::Tube || s.kind == SurfaceKind::AnchorRing) {
        // Pole orders of the Gauss map iterates, as far as the budget allows.
        const BeltramiOp op(s, FormKind::II);
        Vec cur = gauss_map(s);
        json poles = json::array();
        for (int k = 1; k <= c.k_max; ++k) {
            cur = op.apply(cur);
            if (term_count(cur) > c.budget) {
                j["poles_truncated_at"] = k;
                break;
            }
            json row;
            row["k"] = k;
            for (int a = 0; a < 3; ++a) {
                const CanonForm f = canonicalize(component(cur, a));
                row[component_name(cur, a)] =
                    f.is_zero() ? json(nullptr)
                                : json{{"delta", f.pole_order(Symbol::delta())}, {"cos", f.pole_order(Symbol::cos_phi())}};
            }
            poles.push_back(row);
        }
        j["poles"] = poles;
    }
    return json::array({j});
}

json cmd_list_claims()
{
    json results = json::array();
    for (const auto& info : claim_catalog()) {
        json kinds = json::array();
        for (SurfaceKind k : info.kinds) kinds.push_back(to_string(k));
        results.push_back({{"claim_id", info.id},
                           {"kinds", kinds},
                           {"anchor", info.anchor},
                           {"summary", info.summary},
                           {"known_discrepancy", info.known_discrepancy}});
    }
    return results;
}

json cmd_list_surfaces()
{
    return json::array({
        {{"surface", "tube"},
         {"keys", {"r", "profile"}},
         {"defaults", {{"r", "symbolic (1/5 numerically)"}, {"profile", "default"}}},
         {"description", "rho + r cos(phi) h + r sin(phi) b over a curve with kappa(u), tau(u)"}},
        {{"surface", "anchor-ring"},
         {"keys", {"kappa", "r"}},
         {"defaults", {{"kappa", "symbolic (1 numerically)"}, {"r", "symbolic (1/3 numerically)"}}},
         {"description", "tube over a plane circle, kappa constant and tau = 0"}},
        {{"surface", "sphere"},
         {"keys", {"radius", "orientation"}},
         {"defaults", {{"radius", "symbolic (1 numerically)"}, {"orientation", "inward"}}},
         {"description", "rho + (1 - R cos(phi)) h + R sin(phi) b over the unit circle, centered at rho + h"}},
        {{"surface", "generic"},
         {"keys", {"x", "y", "z", "r", "profile"}},
         {"defaults", json::object()},
         {"description", "fixed-basis chart from three coordinate expressions; chart document only"}},
    });
}

// ---- output -----------------------------------------------------------------

std::string cell(const json& v)
{
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void emit_csv(const json& doc, std::ostream& out)
{
    std::vector<std::string> columns = {"version", "seed"};
    for (const auto& row : doc["results"])
        for (const auto& [key, value] : row.items())
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << cell(columns[i]);
    out << "\n";
    for (const auto& row : doc["results"]) {
        out << cell(doc["version"]) << "," << cell(doc["seed"]);
        for (std::size_t i = 2; i < columns.size(); ++i) out << "," << (row.contains(columns[i]) ? cell(row[columns[i]]) : "");
        out << "\n";
    }
}

void emit_text(const json& doc, std::ostream& out)
{
    out << "chentype " << doc["version"].get<std::string>() << "  seed " << doc["seed"].dump() << "\n";
    out << "config";
    for (const auto& [key, value] : doc["config"].items()) out << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    out << "\n";
    for (const auto& row : doc["results"]) {
        out << "\n";
        if (row.contains("verdict") && row.contains("claim_id"))
            out << "[" << row["verdict"].get<std::string>() << "] " << row["claim_id"].get<std::string>() << "\n";
        for (const auto& [key, value] : row.items())
            out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

void emit(const json& doc, const std::string& format, std::ostream& out)
{
    if (format == "json")
        out << doc.dump(2) << "\n";
    else if (format == "csv")
        emit_csv(doc, out);
    else
        emit_text(doc, out);
}

int effective_samples(const RunConfig& c)
{
    if (c.samples > 0) return c.samples;
    if (c.command == "finite-type") return 10 * (c.k_max + 1);
    return 25;
}

int dispatch(const RunConfig& c, std::ostream& out)
{
    const int samples = effective_samples(c);
    json doc;
    doc["version"] = kVersion;
    doc["seed"] = c.seed;
    doc["config"] = config_json(c, samples);
    int code = kOk;
    if (c.command == "forms") {
        doc["results"] = cmd_forms(load_chart(chart_document(c)));
    } else if (c.command == "laplace") {
        doc["results"] = cmd_laplace(c, load_chart(chart_document(c)), samples);
    } else if (c.command == "verify") {
        VerifyOutcome v = cmd_verify(c, samples);
        doc["results"] = std::move(v.results);
        if (!v.ok) code = kFailure;
    } else if (c.command == "finite-type") {
        doc["results"] = cmd_finite_type(c, load_chart(chart_document(c)), samples);
    } else if (c.command == "list-claims") {
        doc["results"] = cmd_list_claims();
    } else {
        doc["results"] = cmd_list_surfaces();
    }
    emit(doc, c.format, out);
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Beltrami operators of the second fundamental form on tubes, anchor rings and spheres", "chentype"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--surface", c.surface, "Builtin surface")
        ->check(CLI::IsMember({"tube", "anchor-ring", "sphere"}))
        ->envname("CHENTYPE_SURFACE");
    app.add_option("--chart", c.chart_path, "Chart document (key = value lines)")->envname("CHENTYPE_CHART");
    app.add_option("--r", c.r, "Tube or ring radius, exact decimal or fraction")->envname("CHENTYPE_R");
    app.add_option("--kappa", c.kappa, "Anchor ring curvature")->envname("CHENTYPE_KAPPA");
    app.add_option("--radius", c.radius, "Sphere radius")->envname("CHENTYPE_RADIUS");
    app.add_option("--profile", c.profile, "Numeric spine: default, helix:k,t or circle:k")->envname("CHENTYPE_PROFILE");
    app.add_option("--orientation", c.orientation, "Sphere normal: inward or outward")->envname("CHENTYPE_ORIENTATION");
    app.add_option("--form", c.form, "Operator form J")->check(CLI::IsMember({"I", "II", "III"}))->envname("CHENTYPE_FORM");
    app.add_option("--seed", c.seed, "Random seed")->envname("CHENTYPE_SEED");
    app.add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->envname("CHENTYPE_FORMAT");
    app.add_option("--tol", c.tol, "Relative tolerance of numeric cross-checks")
        ->check(CLI::PositiveNumber)
        ->envname("CHENTYPE_TOL");
    app.add_option("--samples", c.samples, "Sample points (0: command default)")
        ->check(CLI::NonNegativeNumber)
        ->envname("CHENTYPE_SAMPLES");
    app.add_flag("--numeric", c.numeric, "Fall back to numeric iterates past the budget")->envname("CHENTYPE_NUMERIC");
    app.add_flag("--strict", c.strict, "Known discrepancies fail the run")->envname("CHENTYPE_STRICT");
    app.add_option("--budget", c.budget, "Numerator term budget for symbolic iterates")
        ->check(CLI::PositiveNumber)
        ->envname("CHENTYPE_BUDGET");

    app.add_subcommand("forms", "Fundamental forms, determinants and curvatures");
    auto* laplace = app.add_subcommand("laplace", "Iterates of the Beltrami operator on the position or Gauss map");
    laplace->add_option("--target", c.target, "position or gaussmap")->check(CLI::IsMember({"position", "gaussmap"}));
    laplace->add_option("--k", c.k, "Number of applications")->check(CLI::PositiveNumber);
    auto* verify = app.add_subcommand("verify", "Run claims from the registry");
    verify->add_option("--claims", c.claims, "Comma-separated claim ids (default: all)");
    auto* finite = app.add_subcommand("finite-type", "Rank and annihilator evidence for the Gauss map");
    finite->add_option("--k-max", c.k_max, "Largest polynomial degree tried")->check(CLI::PositiveNumber);
    finite->add_option("--rank-tol", c.rank_tol, "Relative pivot tolerance of the rank test")->check(CLI::PositiveNumber);
    app.add_subcommand("list-claims", "Claim registry");
    app.add_subcommand("list-surfaces", "Builtin surfaces and chart keys");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(c, out);
    } catch (const UnknownClaim& e) {
        err << "error: " << e.what() << "\n";
        return kUnknownClaim;
    } catch (const DegenerateForm& e) {
        err << "error: degenerate form: " << e.what() << "\n";
        return kDegenerate;
    } catch (const IllConditionedSamples& e) {
        err << "error: degenerate sampling: " << e.what() << "\n";
        return kDegenerate;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const ExpressionBudgetExceeded& e) {
        err << "error: " << e.what() << " (use --numeric or raise --budget)\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

} // namespace chentype::cli

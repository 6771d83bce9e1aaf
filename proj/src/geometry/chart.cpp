#include "chentype/geometry/chart.hpp"

#include "chentype/errors.hpp"
#include "chentype/symexpr/parse.hpp"

#include <map>
#include <sstream>

namespace chentype {

std::string to_string(SurfaceKind k)
{
    switch (k) {
    case SurfaceKind::Tube: return "tube";
    case SurfaceKind::AnchorRing: return "anchor-ring";
    case SurfaceKind::Sphere: return "sphere";
    case SurfaceKind::Generic: return "generic";
    }
    return "?";
}

double SurfaceChart::radius_value() const
{
    if (params.radius) return params.radius->get_d();
    switch (kind) {
    case SurfaceKind::Tube: return 0.2;
    case SurfaceKind::AnchorRing: return 1.0 / 3.0;
    default: return 1.0;
    }
}

NumericProfile SurfaceChart::at(double u, double phi, int max_order) const
{
    return profile.at(u, phi, radius_value(), max_order);
}

namespace {

FrameVec tube_offset() { return {0, radius() * cos_phi(), radius() * sin_phi()}; }

} // namespace

SurfaceChart make_tube(std::optional<Rational> r, SpineProfile profile)
{
    SurfaceChart s;
    s.kind = SurfaceKind::Tube;
    s.offset = tube_offset();
    s.spine = Spine::general();
    s.params.radius = r;
    s.profile = profile;
    return s;
}

SurfaceChart make_anchor_ring(std::optional<Rational> kappa, std::optional<Rational> r)
{
    SurfaceChart s;
    s.kind = SurfaceKind::AnchorRing;
    s.offset = tube_offset();
    s.spine = Spine::circle();
    s.params.radius = r;
    s.params.kappa = kappa;
    s.profile = SpineProfile::circle(kappa ? kappa->get_d() : 1.0);
    return s;
}

SurfaceChart make_sphere(std::optional<Rational> radius_value, Orientation o)
{
    SurfaceChart s;
    s.kind = SurfaceKind::Sphere;
    s.offset = FrameVec(0, 1 - radius() * cos_phi(), radius() * sin_phi());
    s.spine = Spine::unit_circle();
    s.orientation = o;
    s.params.radius = radius_value;
    s.profile = SpineProfile::circle(1.0);
    return s;
}

SurfaceChart make_generic(AmbientVec position, SpineProfile profile)
{
    SurfaceChart s;
    s.kind = SurfaceKind::Generic;
    s.offset = std::move(position);
    s.spine_point = false;
    s.spine = Spine::general();
    s.profile = profile;
    return s;
}

Vec d_du(const SurfaceChart& s, const Vec& v)
{
    if (auto* f = std::get_if<FrameVec>(&v)) return d_du(*f, s.spine);
    return d_du(std::get<AmbientVec>(v), s.rules());
}

Vec d_dphi(const SurfaceChart&, const Vec& v)
{
    if (auto* f = std::get_if<FrameVec>(&v)) return d_dphi(*f);
    return d_dphi(std::get<AmbientVec>(v));
}

Vec tangent_u(const SurfaceChart& s)
{
    Vec d = d_du(s, s.offset);
    if (s.spine_point) d = add(d, Vec(FrameVec::unit_t()));
    return simplify(d);
}

Vec tangent_phi(const SurfaceChart& s) { return simplify(d_dphi(s, s.offset)); }

Vec sphere_center_offset(const SurfaceChart& s)
{
    if (s.kind == SurfaceKind::Sphere) return FrameVec::unit_h();
    if (s.frame_based()) return FrameVec{};
    return AmbientVec{};
}

namespace {

SpineProfile parse_profile(const std::string& text)
{
    auto numbers = [&](std::size_t from) {
        std::vector<double> out;
        std::string rest = text.substr(from);
        for (auto& ch : rest)
            if (ch == ',') ch = ' ';
        std::istringstream in(rest);
        std::string tok;
        while (in >> tok) out.push_back(parse_rational(tok).get_d());
        return out;
    };
    if (text == "default") return SpineProfile::default_profile();
    if (text.rfind("helix:", 0) == 0) {
        auto v = numbers(6);
        if (v.size() != 2) throw ParseError("helix profile needs kappa,tau");
        return SpineProfile::helix(v[0], v[1]);
    }
    if (text.rfind("circle:", 0) == 0) {
        auto v = numbers(7);
        if (v.size() != 1) throw ParseError("circle profile needs kappa");
        return SpineProfile::circle(v[0]);
    }
    throw ParseError("unknown profile '" + text + "'");
}

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

SurfaceChart load_chart(std::string_view text)
{
    std::map<std::string, std::string> kv;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("chart line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ParseError("chart line " + std::to_string(line_no) + ": empty key or value");
        if (!kv.emplace(key, value).second) throw ParseError("chart line " + std::to_string(line_no) + ": duplicate key " + key);
    }

    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto rational = [&](const std::string& key) -> std::optional<Rational> {
        auto v = take(key);
        if (!v) return std::nullopt;
        return parse_rational(*v);
    };

    auto kind = take("kind");
    if (!kind) throw ParseError("chart document lacks 'kind'");
    SurfaceChart chart;
    if (*kind == "tube") {
        auto r = rational("r");
        chart = make_tube(r);
    } else if (*kind == "anchor-ring") {
        auto r = rational("r");
        auto k = rational("kappa");
        chart = make_anchor_ring(k, r);
    } else if (*kind == "sphere") {
        auto R = rational("radius");
        Orientation o = Orientation::Inward;
        if (auto v = take("orientation")) {
            if (*v == "outward")
                o = Orientation::Outward;
            else if (*v != "inward")
                throw ParseError("orientation must be inward or outward");
        }
        chart = make_sphere(R, o);
    } else if (*kind == "generic") {
        auto x = take("x"), y = take("y"), z = take("z");
        if (!x || !y || !z) throw ParseError("generic charts need x, y and z");
        chart = make_generic(AmbientVec(parse_expr(*x), parse_expr(*y), parse_expr(*z)));
        if (auto r = rational("r")) chart.params.radius = r;
    } else {
        throw ParseError("unknown chart kind '" + *kind + "'");
    }
    if (auto p = take("profile")) {
        if (chart.kind != SurfaceKind::Tube && chart.kind != SurfaceKind::Generic)
            throw ParseError("profile applies to tube and generic charts only");
        chart.profile = parse_profile(*p);
    }
    if (chart.params.radius && *chart.params.radius <= 0) throw ParseError("radius parameter must be positive");
    if (!kv.empty()) throw ParseError("unknown chart key '" + kv.begin()->first + "'");
    return chart;
}

} // namespace chentype

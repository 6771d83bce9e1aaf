#pragma once

#include "chentype/frames/frame_vec.hpp"
#include "chentype/symexpr/canon_form.hpp"
#include "chentype/symexpr/profile.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace chentype {

enum class SurfaceKind { Tube, AnchorRing, Sphere, Generic };

std::string to_string(SurfaceKind k);

/// Which way the unit normal of a sphere points. Tubes always use the normal
/// -cos(phi) h - sin(phi) b, which points toward the spine.
enum class Orientation { Inward, Outward };

/// Parametric surface in the chart variables (u, phi).
///
/// Frame-based charts store the offset from the spine point rho(u), so the
/// surface is x = rho + offset with rho' = t; `spine_point` records that the
/// position carries the rho term. Generic charts use fixed ambient
/// coordinates and carry no spine point.
struct SurfaceChart {
    SurfaceKind kind = SurfaceKind::Tube;
    Vec offset = FrameVec{};
    bool spine_point = true;
    Spine spine = Spine::general();
    Orientation orientation = Orientation::Inward;
    /// Optional numeric values of r (or the sphere radius R) and kappa.
    Bindings params;
    /// Curvature and torsion used for numeric work.
    SpineProfile profile = SpineProfile::default_profile();

    const UDerivativeRules& rules() const { return spine.rules; }
    bool frame_based() const { return std::holds_alternative<FrameVec>(offset); }

    /// Numeric radius parameter (r or R).
    double radius_value() const;
    /// Profile at (u, phi) with the chart's radius parameter filled in.
    NumericProfile at(double u, double phi, int max_order = kMaxDerivativeOrder) const;
};

/// x = rho + r cos(phi) h + r sin(phi) b over a space curve with symbolic
/// kappa(u), tau(u).
SurfaceChart make_tube(std::optional<Rational> r = std::nullopt, SpineProfile profile = SpineProfile::default_profile());
/// Tube over a plane circle: kappa constant, tau = 0.
SurfaceChart make_anchor_ring(std::optional<Rational> kappa = std::nullopt, std::optional<Rational> r = std::nullopt);
/// Sphere of radius R (the symbol r) as the surface of revolution of a
/// meridian circle around the axis of the unit circle spine:
/// x = rho + (1 - R cos(phi)) h + R sin(phi) b, centered at rho + h.
SurfaceChart make_sphere(std::optional<Rational> radius = std::nullopt, Orientation o = Orientation::Inward);
/// Fixed-basis chart with arbitrary coordinate expressions.
SurfaceChart make_generic(AmbientVec position, SpineProfile profile = SpineProfile::default_profile());

/// Position derivatives x_u and x_phi (the spine term contributes t to x_u).
Vec tangent_u(const SurfaceChart& s);
Vec tangent_phi(const SurfaceChart& s);
/// u-derivative of a field living on the chart, frame-aware for frame charts.
Vec d_du(const SurfaceChart& s, const Vec& v);
Vec d_dphi(const SurfaceChart& s, const Vec& v);

/// Sphere center relative to the spine point (h), zero for other kinds.
Vec sphere_center_offset(const SurfaceChart& s);

/// Reads the key = value chart document described in the README. Throws
/// ParseError.
SurfaceChart load_chart(std::string_view text);

} // namespace chentype

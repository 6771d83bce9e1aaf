#pragma once

#include "chentype/beltrami/operator.hpp"
#include "chentype/frames/numeric_frame.hpp"

#include <vector>

namespace chentype {

/// Parameter point (u, phi) on a chart.
struct SamplePoint {
    double u = 0.0;
    double phi = 0.0;
};

/// True when |cos(phi)| >= 0.05 and delta >= 0.05 at the point; every
/// numeric routine below requires it.
bool admissible(const SurfaceChart& s, SamplePoint p);

/// Global coordinates of a chart field at a point: frame components are
/// rotated by the spine frame at u, and with spine_point the spine position is
/// added.
Vec3 global_value(const SurfaceChart& s, const Vec& v, SamplePoint p, bool spine_point = false);

/// Values of v, Delta v, ..., Delta^k v at one point in global coordinates.
///
/// Works on truncated Taylor jets: the operator coefficients and the field are
/// expanded to total degree 2k in (du, dphi) around the point, the moving
/// frame is replaced by its Taylor series, and each application consumes two
/// orders. No expression growth, so k is limited only by the profile.
std::vector<Vec3> numeric_iterates(const BeltramiOp& op, const Vec& v, SamplePoint p, int k,
                                   bool spine_point = false);

/// Delta v at a point from the divergence form with a square root of |det J|
/// and nested central differences of the global field with step h.
Vec3 finite_difference_laplacian(const BeltramiOp& op, const Vec& v, SamplePoint p, bool spine_point = false,
                                 double h = 1e-4);

/// J^{ij} f_i g_j at a point by central differences of f and the global g.
Vec3 finite_difference_first(const BeltramiOp& op, const Expr& f, const Vec& g, SamplePoint p,
                             bool spine_point = false, double h = 1e-4);

/// max_i |a_i - b_i| / max(max_i |b_i|, floor).
double relative_error(const Vec3& a, const Vec3& b, double floor = 1e-12);

} // namespace chentype

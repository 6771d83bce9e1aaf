#pragma once

#include "chentype/frames/numeric_frame.hpp"
#include "chentype/geometry/chart.hpp"

#include <array>
#include <optional>

namespace chentype {

enum class FormKind { I, II, III };

std::string to_string(FormKind k);

/// Symmetric 2x2 tensor g11 du^2 + 2 g12 du dphi + g22 dphi^2 with
/// canonicalized entries and a nonvanishing determinant.
class FundForm {
public:
    /// Throws DegenerateForm when the determinant is identically zero.
    FundForm(FormKind which, Expr g11, Expr g12, Expr g22);

    FormKind which() const { return which_; }
    const Expr& g11() const { return g_[0]; }
    const Expr& g12() const { return g_[1]; }
    const Expr& g22() const { return g_[2]; }
    /// Entry (i, j), indices 0 = u, 1 = phi.
    const Expr& operator()(int i, int j) const { return g_[static_cast<std::size_t>(i + j)]; }

    const Expr& det() const { return det_; }
    /// Inverse entries g^{ij}. Throws NonRationalStructure when the
    /// determinant is not a monomial times a power of delta.
    const Expr& inv(int i, int j) const;
    bool has_inverse() const { return inv_.has_value(); }

private:
    FormKind which_;
    std::array<Expr, 3> g_;
    Expr det_;
    std::optional<std::array<Expr, 3>> inv_;
};

FundForm first_form(const SurfaceChart& s);
/// b_ij = x_ij . n. Symbolic only for frame-based charts.
FundForm second_form(const SurfaceChart& s);
/// e_ij = n_i . n_j.
FundForm third_form(const SurfaceChart& s);
FundForm fundamental_form(const SurfaceChart& s, FormKind which);

/// Closed-form unit normal: -cos(phi) h - sin(phi) b for tubes and anchor
/// rings, -(x - center)/R or (x - center)/R for spheres. Generic charts have
/// no symbolic normal (PreconditionError).
Vec gauss_map(const SurfaceChart& s);

/// Outcome of comparing cross(x_u, x_phi)/sqrt(det I) with gauss_map.
struct NormalSign {
    /// +1 or -1 on the region cos(phi) > 0.
    int sign = 1;
    /// The sign flips with cos(phi) (the sphere chart covers the surface twice).
    bool flips_with_cos = false;
    std::string description;
};

/// Checks cross(x_u, x_phi) is parallel to n with length^2 = det I, and
/// records the sign. Throws ConsistencyError when the normal is wrong.
NormalSign verify_normal_sign(const SurfaceChart& s);

struct Curvatures {
    Expr K;
    Expr H;
};

/// K = det II / det I, H = tr(I^{-1} II) / 2, both canonical.
Curvatures curvatures(const SurfaceChart& s);
Expr gauss_curvature(const SurfaceChart& s);

/// Numeric first and second forms and normal of any chart at one point,
/// with the normal from cross(x_u, x_phi) normalized.
struct NumericForms {
    std::array<double, 3> first{};
    std::array<double, 3> second{};
    Vec3 normal{};
    double gauss_curvature = 0.0;
    double mean_curvature = 0.0;
};
NumericForms numeric_forms(const SurfaceChart& s, const NumericProfile& p);

} // namespace chentype

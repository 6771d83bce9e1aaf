#pragma once

#include "chentype/geometry/forms.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace chentype {

/// Default cap on canonical numerator size during iteration.
inline constexpr std::size_t kDefaultTermBudget = 200000;

/// Second Beltrami operator of a fundamental form J,
///   Delta f = -(1/sqrt|J|) d_j (sqrt|J| J^{ij} d_i f),
/// kept radical-free through the product rule:
///   Delta f = -J^{ij} f_ij - (d_j J^{ij}) f_i - (d_j det / 2 det) J^{ij} f_i.
/// The expansion is stored as five coefficients
///   Delta = c_uu d_uu + c_uphi d_uphi + c_phiphi d_phiphi + c_u d_u + c_phi d_phi.
class BeltramiOp {
public:
    enum Coefficient { UU = 0, UPhi = 1, PhiPhi = 2, U = 3, Phi = 4 };

    /// Throws DegenerateForm for an identically degenerate form.
    BeltramiOp(SurfaceChart chart, FormKind which);

    const SurfaceChart& chart() const { return chart_; }
    const FundForm& form() const { return form_; }
    const CanonForm& coefficient(Coefficient c) const { return coef_[c]; }

    /// Expanded-coefficient path.
    CanonForm apply(const CanonForm& f) const;
    Expr apply(const Expr& f) const;
    /// Divergence path: W^j = J^{ij} f_i, Delta f = -(d_j W^j + W^j det_j / 2 det).
    Expr apply_direct(const Expr& f) const;

    /// Frame-aware vector versions. With spine_point the field carries the
    /// spine position rho(u) (derivative t), as the position vector does.
    Vec apply(const Vec& v, bool spine_point = false) const;
    Vec apply_direct(const Vec& v, bool spine_point = false) const;

    /// First Beltrami operator J^{ij} f_i g_j.
    Expr first(const Expr& f, const Expr& g) const;
    Vec first(const Expr& f, const Vec& g, bool spine_point = false) const;

private:
    SurfaceChart chart_;
    FundForm form_;
    std::array<CanonForm, 3> inv_;
    /// d_u det / det and d_phi det / det.
    std::array<CanonForm, 2> log_det_;
    std::array<CanonForm, 5> coef_;
    CanonForm kappa_, tau_;
};

Expr laplacian(const BeltramiOp& op, const Expr& f);
Vec laplacian_vec(const BeltramiOp& op, const Vec& v, bool spine_point = false);
Expr first_beltrami(const BeltramiOp& op, const Expr& f, const Expr& g);
Vec first_beltrami(const BeltramiOp& op, const Expr& f, const Vec& g);

/// [Delta v, Delta^2 v, ..., Delta^k v], canonical. Throws
/// ExpressionBudgetExceeded as soon as a component numerator exceeds
/// `budget` terms, and PreconditionError for k < 1.
std::vector<Vec> iterate(const BeltramiOp& op, const Vec& v, int k, std::size_t budget = kDefaultTermBudget,
                         bool spine_point = false);

/// Largest numerator size over the components of v.
std::size_t term_count(const Vec& v);

} // namespace chentype

#include "chentype/beltrami/operator.hpp"

#include "chentype/errors.hpp"

#include <algorithm>

namespace chentype {

namespace {

using Triple = std::array<CanonForm, 3>;

const Rational kHalf(1, 2);

/// Field components plus how to differentiate them along u.
struct Field {
    Triple c;
    bool frame = true;
};

Field to_field(const Vec& v)
{
    Field f;
    f.frame = std::holds_alternative<FrameVec>(v);
    for (int i = 0; i < 3; ++i) f.c[static_cast<std::size_t>(i)] = canonicalize(component(v, i));
    return f;
}

Vec to_vec(const Field& f)
{
    if (f.frame) return FrameVec(Expr::canonical(f.c[0]), Expr::canonical(f.c[1]), Expr::canonical(f.c[2]));
    return AmbientVec(Expr::canonical(f.c[0]), Expr::canonical(f.c[1]), Expr::canonical(f.c[2]));
}

Field map(const Field& f, auto&& fn)
{
    Field out{{}, f.frame};
    for (std::size_t i = 0; i < 3; ++i) out.c[i] = fn(f.c[i]);
    return out;
}

Field combine(const Field& a, const Field& b, auto&& fn)
{
    Field out{{}, a.frame};
    for (std::size_t i = 0; i < 3; ++i) out.c[i] = fn(a.c[i], b.c[i]);
    return out;
}

} // namespace

BeltramiOp::BeltramiOp(SurfaceChart chart, FormKind which)
    : chart_(std::move(chart)), form_(fundamental_form(chart_, which))
{
    const auto& rules = chart_.rules();
    for (int k = 0; k < 3; ++k) inv_[static_cast<std::size_t>(k)] = canonicalize(form_.inv(k == 2 ? 1 : 0, k == 0 ? 0 : 1));
    const CanonForm det = canonicalize(form_.det());
    const CanonForm inv_det = det.inverse();
    log_det_ = {det.diff_u(rules) * inv_det, det.diff_phi() * inv_det};
    const auto& [j11, j12, j22] = inv_;
    coef_[UU] = -j11;
    coef_[UPhi] = (-j12).scaled(2);
    coef_[PhiPhi] = -j22;
    coef_[U] = -(j11.diff_u(rules) + j12.diff_phi()) - (j11 * log_det_[0] + j12 * log_det_[1]).scaled(kHalf);
    coef_[Phi] = -(j12.diff_u(rules) + j22.diff_phi()) - (j12 * log_det_[0] + j22 * log_det_[1]).scaled(kHalf);
    kappa_ = canonicalize(chart_.spine.kappa);
    tau_ = canonicalize(chart_.spine.tau);
}

CanonForm BeltramiOp::apply(const CanonForm& f) const
{
    const auto& rules = chart_.rules();
    const CanonForm fu = f.diff_u(rules);
    const CanonForm fp = f.diff_phi();
    return coef_[UU] * fu.diff_u(rules) + coef_[UPhi] * fu.diff_phi() + coef_[PhiPhi] * fp.diff_phi() +
           coef_[U] * fu + coef_[Phi] * fp;
}

Expr BeltramiOp::apply(const Expr& f) const { return Expr::canonical(apply(canonicalize(f))); }

Expr BeltramiOp::apply_direct(const Expr& e) const
{
    const auto& rules = chart_.rules();
    const CanonForm f = canonicalize(e);
    const CanonForm fu = f.diff_u(rules);
    const CanonForm fp = f.diff_phi();
    const CanonForm wu = inv_[0] * fu + inv_[1] * fp;
    const CanonForm wp = inv_[1] * fu + inv_[2] * fp;
    return Expr::canonical(-(wu.diff_u(rules) + wp.diff_phi() + (wu * log_det_[0] + wp * log_det_[1]).scaled(kHalf)));
}

namespace {

struct VecCalculus {
    const UDerivativeRules& rules;
    const CanonForm& kappa;
    const CanonForm& tau;

    Field du(const Field& v) const
    {
        Field d = map(v, [&](const CanonForm& x) { return x.diff_u(rules); });
        if (v.frame) {
            d.c[0] = d.c[0] - kappa * v.c[1];
            d.c[1] = d.c[1] + kappa * v.c[0] - tau * v.c[2];
            d.c[2] = d.c[2] + tau * v.c[1];
        }
        return d;
    }
    static Field dphi(const Field& v)
    {
        return map(v, [](const CanonForm& x) { return x.diff_phi(); });
    }
    /// First u-derivative, with the spine point's t when present.
    Field du_first(const Field& v, bool spine_point) const
    {
        Field d = du(v);
        if (spine_point) d.c[0] = d.c[0] + CanonForm::constant(1);
        return d;
    }
};

Field scaled_sum(std::initializer_list<std::pair<const CanonForm*, const Field*>> terms)
{
    Field out{{}, terms.begin()->second->frame};
    for (std::size_t i = 0; i < 3; ++i) {
        CanonForm acc;
        for (const auto& [c, f] : terms) acc = acc + *c * f->c[i];
        out.c[i] = std::move(acc);
    }
    return out;
}

} // namespace

Vec BeltramiOp::apply(const Vec& v, bool spine_point) const
{
    const VecCalculus d{chart_.rules(), kappa_, tau_};
    const Field f = to_field(v);
    const Field fu = d.du_first(f, spine_point);
    const Field fp = VecCalculus::dphi(f);
    const Field fuu = d.du(fu), fup = VecCalculus::dphi(fu), fpp = VecCalculus::dphi(fp);
    return to_vec(scaled_sum({{&coef_[UU], &fuu},
                              {&coef_[UPhi], &fup},
                              {&coef_[PhiPhi], &fpp},
                              {&coef_[U], &fu},
                              {&coef_[Phi], &fp}}));
}

Vec BeltramiOp::apply_direct(const Vec& v, bool spine_point) const
{
    const VecCalculus d{chart_.rules(), kappa_, tau_};
    const Field f = to_field(v);
    const Field fu = d.du_first(f, spine_point);
    const Field fp = VecCalculus::dphi(f);
    const Field wu = scaled_sum({{&inv_[0], &fu}, {&inv_[1], &fp}});
    const Field wp = scaled_sum({{&inv_[1], &fu}, {&inv_[2], &fp}});
    const Field div = combine(d.du(wu), VecCalculus::dphi(wp), [](const CanonForm& a, const CanonForm& b) { return a + b; });
    const Field drift = scaled_sum({{&log_det_[0], &wu}, {&log_det_[1], &wp}});
    return to_vec(combine(div, drift, [](const CanonForm& a, const CanonForm& b) { return -(a + b.scaled(kHalf)); }));
}

Expr BeltramiOp::first(const Expr& f, const Expr& g) const
{
    const auto& rules = chart_.rules();
    const CanonForm a = canonicalize(f), b = canonicalize(g);
    const CanonForm au = a.diff_u(rules), ap = a.diff_phi();
    const CanonForm bu = b.diff_u(rules), bp = b.diff_phi();
    return Expr::canonical(inv_[0] * au * bu + inv_[1] * (au * bp + ap * bu) + inv_[2] * ap * bp);
}

Vec BeltramiOp::first(const Expr& f, const Vec& g, bool spine_point) const
{
    const VecCalculus d{chart_.rules(), kappa_, tau_};
    const CanonForm a = canonicalize(f);
    const CanonForm au = a.diff_u(chart_.rules()), ap = a.diff_phi();
    const CanonForm wu = inv_[0] * au + inv_[1] * ap;
    const CanonForm wp = inv_[1] * au + inv_[2] * ap;
    const Field b = to_field(g);
    const Field bu = d.du_first(b, spine_point), bp = VecCalculus::dphi(b);
    return to_vec(scaled_sum({{&wu, &bu}, {&wp, &bp}}));
}

Expr laplacian(const BeltramiOp& op, const Expr& f) { return op.apply(f); }

Vec laplacian_vec(const BeltramiOp& op, const Vec& v, bool spine_point) { return op.apply(v, spine_point); }

Expr first_beltrami(const BeltramiOp& op, const Expr& f, const Expr& g) { return op.first(f, g); }

Vec first_beltrami(const BeltramiOp& op, const Expr& f, const Vec& g) { return op.first(f, g); }

std::size_t term_count(const Vec& v)
{
    std::size_t n = 0;
    for (int i = 0; i < 3; ++i) n = std::max(n, canonicalize(component(v, i)).term_count());
    return n;
}

std::vector<Vec> iterate(const BeltramiOp& op, const Vec& v, int k, std::size_t budget, bool spine_point)
{
    if (k < 1) throw PreconditionError("iteration count must be at least 1");
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(k));
    Vec cur = v;
    bool carries_spine = spine_point;
    for (int i = 0; i < k; ++i) {
        cur = op.apply(cur, carries_spine);
        carries_spine = false;
        const std::size_t size = term_count(cur);
        if (size > budget)
            throw ExpressionBudgetExceeded("iterate " + std::to_string(i + 1) + " has " + std::to_string(size) +
                                           " numerator terms (budget " + std::to_string(budget) + ")");
        out.push_back(cur);
    }
    return out;
}

} // namespace chentype

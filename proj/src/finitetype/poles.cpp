#include "chentype/finitetype/poles.hpp"

#include "chentype/errors.hpp"

namespace chentype {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::NumericOnlyPass: return "NUMERIC_ONLY_PASS";
    case Verdict::Error: return "ERROR";
    }
    return "?";
}

void ClaimReport::fail(std::string key, std::string why)
{
    if (verdict != Verdict::Error) verdict = Verdict::Mismatch;
    note(std::move(key), std::move(why));
}

std::vector<PoleRecord> pole_growth(const SurfaceChart& s, int k_max, std::size_t budget)
{
    if (s.kind != SurfaceKind::Tube && s.kind != SurfaceKind::AnchorRing)
        throw PreconditionError("pole growth is defined for tubes and anchor rings");
    const BeltramiOp op(s, FormKind::II);
    const auto iterates = iterate(op, gauss_map(s), k_max, budget);
    std::vector<PoleRecord> out;
    for (int k = 1; k <= k_max; ++k) {
        for (int c = 0; c < 3; ++c) {
            const CanonForm f = canonicalize(component(iterates[static_cast<std::size_t>(k - 1)], c));
            PoleRecord rec;
            rec.k = k;
            rec.component = c;
            rec.zero = f.is_zero();
            if (!rec.zero) {
                rec.delta_order = f.pole_order(Symbol::delta());
                rec.cos_order = f.pole_order(Symbol::cos_phi());
                rec.delta_leading = f.leading_coefficient(Symbol::delta());
                rec.cos_leading = f.leading_coefficient(Symbol::cos_phi());
            }
            out.push_back(std::move(rec));
        }
    }
    return out;
}

std::optional<Rational> proportionality(const CanonForm& a, const CanonForm& b)
{
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.term_count() != b.term_count()) return std::nullopt;
    const auto& ta = a.numerator().terms().front();
    const auto& tb = b.numerator().terms().front();
    if (!(ta.mono == tb.mono)) return std::nullopt;
    Rational q = Rational(ta.coef, a.denominator().constant) / Rational(tb.coef, b.denominator().constant);
    q.canonicalize();
    if (!(b.scaled(q) == a)) return std::nullopt;
    return q;
}

LeadingCheck check_leading(const Expr& computed, const Expr& leading, int delta_cap, int cos_cap, Symbol atom)
{
    const CanonForm c = canonicalize(computed);
    const CanonForm l = canonicalize(leading);
    const CanonForm rest = c - l;
    LeadingCheck out;
    out.remainder_delta_order = rest.is_zero() ? 0 : rest.pole_order(Symbol::delta());
    out.remainder_cos_order = rest.is_zero() ? 0 : rest.pole_order(Symbol::cos_phi());
    out.holds = out.remainder_delta_order <= delta_cap && out.remainder_cos_order <= cos_cap;
    if (!c.is_zero() && !l.is_zero() && c.pole_order(atom) == l.pole_order(atom))
        out.ratio = proportionality(c.leading_coefficient(atom), l.leading_coefficient(atom));
    return out;
}

namespace {

std::string orders(int d, int c) { return "(" + std::to_string(d) + ", " + std::to_string(c) + ")"; }

/// Engine multiple of `base` in the top pole of `computed`, if any.
std::optional<Rational> top_multiple(const CanonForm& computed, const Expr& base, Symbol atom)
{
    const CanonForm b = canonicalize(base);
    if (computed.is_zero() || computed.pole_order(atom) != b.pole_order(atom)) return std::nullopt;
    return proportionality(computed.leading_coefficient(atom), b.leading_coefficient(atom));
}

Rational at_zero(const Expr& poly_in_delta)
{
    // h(delta) at delta = 0: evaluate exactly at r kappa cos = 1.
    ExactPoint p{Rational(1), Rational(0), Rational(1), {Rational(1)}, {Rational(0)}};
    return canonicalize(poly_in_delta).evaluate_exact(p);
}

} // namespace

ClaimReport lemma1_check(int m, int n, const Expr& h, std::size_t budget)
{
    if (m < 1 || n < 1) throw PreconditionError("lemma check needs m, n >= 1");
    if (is_zero(h)) throw PreconditionError("lemma check needs a nonzero h");
    const Expr d = delta(), kc = kappa() * cos_phi(), b = beta();
    const Expr f = h * pow(b, m) / (pow(d, n) * pow(kc, n - 1));
    const Expr factor = ((2 * n - 1) * d - n) * (4 * (n + 1) * d - (2 * n + 3));
    const Expr base = pow(b, m + 2) / (pow(d, n + 3) * pow(kc, n + 2));
    const Expr expected = -(factor * h) * base / 2;

    ClaimReport r;
    r.claim_id = "lemma1";
    r.surface = "tube";
    r.anchor = "For any natural numbers";
    r.expected = to_string(expected) + " + Q/(kappa*delta*cos(phi))^" + std::to_string(n + 2);
    const BeltramiOp op(make_tube(), FormKind::II);
    const CanonForm got = canonicalize(op.apply(f));
    if (got.term_count() > budget) throw ExpressionBudgetExceeded("lemma image exceeds the term budget");
    r.note("m, n", std::to_string(m) + ", " + std::to_string(n));
    r.note("h", to_string(h));
    r.note("pole orders (delta, cos)", orders(got.pole_order(Symbol::delta()), got.pole_order(Symbol::cos_phi())));
    r.computed = "top delta pole " + got.leading_coefficient(Symbol::delta()).to_string() + " / delta^" +
                 std::to_string(got.pole_order(Symbol::delta()));

    const auto multiple = top_multiple(got, base, Symbol::delta());
    if (multiple) {
        const Rational engine_h0 = -2 * *multiple;
        r.note("engine h~(0)", to_string(engine_h0));
        r.note("predicted h~(0)", to_string(at_zero(factor * h)));
    } else {
        r.note("engine h~(0)", "top pole is not a rational multiple of beta^(m+2)/(delta^(n+3)(kappa cos)^(n+2))");
    }
    const LeadingCheck lc = check_leading(Expr::canonical(got), expected, n + 2, n + 2, Symbol::delta());
    r.note("remainder orders (delta, cos)", orders(lc.remainder_delta_order, lc.remainder_cos_order));
    if (!lc.holds) r.fail("verdict", "remainder exceeds order " + std::to_string(n + 2) + " in delta or cos(phi)");
    return r;
}

ClaimReport ring_recurrence_check(int m, int n, const SurfaceChart& ring)
{
    if (m < 1 || n < 1) throw PreconditionError("ring recurrence check needs m, n >= 1");
    if (ring.kind != SurfaceKind::AnchorRing) throw PreconditionError("ring recurrence check needs an anchor ring");
    const Expr s = sin_phi(), dc = delta() * cos_phi(), r = radius();
    const Expr f = pow(s, m) / pow(dc, n);
    const Expr base = pow(s, m + 2) / (r * pow(dc, n + 2));
    const Expr expected = Rational(3, 2) * base;

    ClaimReport rep;
    rep.claim_id = "eq19";
    rep.surface = to_string(ring.kind);
    rep.anchor = "One can easily prove that";
    rep.expected = to_string(expected) + " + Q/(delta*cos(phi))^" + std::to_string(n + 1);
    const BeltramiOp op(ring, FormKind::II);
    const CanonForm got = canonicalize(op.apply(f));
    rep.computed = got.to_string(ring.params);
    rep.note("m, n", std::to_string(m) + ", " + std::to_string(n));
    if (auto q = top_multiple(got, base, Symbol::cos_phi()))
        rep.note("engine coefficient of sin^(m+2)/(r (delta cos)^(n+2))", to_string(*q));
    const LeadingCheck lc = check_leading(Expr::canonical(got), expected, n + 1, n + 1, Symbol::cos_phi());
    rep.note("remainder orders (delta, cos)", orders(lc.remainder_delta_order, lc.remainder_cos_order));
    if (!lc.holds) rep.fail("verdict", "remainder exceeds order " + std::to_string(n + 1) + " in delta or cos(phi)");
    return rep;
}

ClaimReport h_lambda_check(int lambda_max, std::size_t budget)
{
    if (lambda_max < 1) throw PreconditionError("h_lambda check needs lambda_max >= 1");
    const Expr d = delta();
    ClaimReport r;
    r.claim_id = "hlambda";
    r.surface = "tube";
    r.anchor = "for any positive integer";
    r.known_discrepancy = true;
    r.expected = "h_k(delta) = prod_{j=1}^{k-1} 12 j delta (4j - 5)";

    const auto records = pole_growth(make_tube(), lambda_max, budget);
    std::string engine_values;
    bool product_ok = true;
    for (int k = 1; k <= lambda_max; ++k) {
        const PoleRecord& t = records[static_cast<std::size_t>(3 * (k - 1))];
        const Expr base = pow(beta(), 2 * k - 1) /
                          (Expr(Rational(Integer(1) << k)) * pow(d, 3 * k - 1) * pow(kappa() * cos_phi(), 3 * k - 2));
        Expr product = 1;
        for (int j = 1; j < k; ++j) product = product * (12 * j * d * (4 * j - 5));
        const std::string key = "k=" + std::to_string(k);
        if (t.zero || t.delta_order != 3 * k - 1) {
            r.fail(key, "t-component delta order " + std::to_string(t.delta_order) + ", expected " + std::to_string(3 * k - 1));
            product_ok = false;
            continue;
        }
        const auto engine = proportionality(t.delta_leading, canonicalize(base).leading_coefficient(Symbol::delta()));
        const std::string engine_text = engine ? to_string(*engine) : "not a multiple of the beta power";
        engine_values += (engine_values.empty() ? "" : ", ") + engine_text;
        r.note(key + " engine h_k(0)", engine_text);
        r.note(key + " product h_k(0)", to_string(at_zero(product)));
        const bool match = engine && *engine == at_zero(product);
        if (!match) product_ok = false;
        r.note(key + " product display", match ? "matches" : "differs");
        if (k == 2 || k == 3) {
            Expr explicit_h = (3 * d - 2) * (12 * d - 7);
            if (k == 3) explicit_h = explicit_h * (9 * d - 7) * (24 * d - 13);
            const bool ok = engine && *engine == at_zero(explicit_h);
            r.note(key + " explicit product h_k(0)", to_string(at_zero(explicit_h)) + (ok ? " (matches)" : " (differs)"));
        }
    }
    r.computed = "h_k(0) for k = 1.." + std::to_string(lambda_max) + ": " + engine_values;
    if (!product_ok) r.fail("verdict", "product display differs from the engine's leading coefficients");
    return r;
}

} // namespace chentype

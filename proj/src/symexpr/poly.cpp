#include "chentype/symexpr/poly.hpp"

#include "chentype/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace chentype {

int slot_of(Symbol s)
{
    switch (s.kind) {
    case SymbolKind::CosPhi: return kSlotCos;
    case SymbolKind::SinPhi: return kSlotSin;
    case SymbolKind::Radius: return kSlotRadius;
    case SymbolKind::Kappa:
    case SymbolKind::Tau:
        if (s.order < 0 || s.order > kMaxDerivativeOrder)
            throw Error("derivative order " + std::to_string(s.order) + " outside the tracked range");
        return s.kind == SymbolKind::Kappa ? kappa_slot(s.order) : tau_slot(s.order);
    case SymbolKind::Delta: break;
    }
    throw Error("delta has no polynomial slot");
}

Symbol symbol_of_slot(int slot)
{
    if (slot == kSlotCos) return Symbol::cos_phi();
    if (slot == kSlotSin) return Symbol::sin_phi();
    if (slot == kSlotRadius) return Symbol::radius();
    int k = slot - 3;
    return (k % 2 == 0) ? Symbol::kappa(k / 2) : Symbol::tau(k / 2);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(int slot, int exponent)
{
    Monomial m;
    m.set(slot, exponent);
    return m;
}

void Monomial::set(int slot, int exponent)
{
    if (exponent < 0 || exponent > kMaxExponent)
        throw Error("monomial exponent " + std::to_string(exponent) + " out of range");
    auto& w = words_[slot >> 3];
    const int shift = 8 * (slot & 7);
    w = (w & ~(std::uint64_t{0xff} << shift)) | (static_cast<std::uint64_t>(exponent) << shift);
}

Monomial Monomial::operator*(const Monomial& other) const
{
    constexpr std::uint64_t high_bits = 0x8080808080808080ull;
    Monomial r;
    std::uint64_t check = 0;
    for (int i = 0; i < 4; ++i) {
        r.words_[i] = words_[i] + other.words_[i];
        check |= r.words_[i];
    }
    if (check & high_bits) throw Error("monomial exponent overflow");
    return r;
}

int Monomial::highest_slot() const
{
    for (int slot = kSlotCount - 1; slot >= 0; --slot)
        if (exponent(slot) != 0) return slot;
    return -1;
}

std::size_t Monomial::hash() const
{
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------
// Accumulation with sin^2 -> 1 - cos^2

namespace {

class Accumulator {
public:
    explicit Accumulator(std::size_t expected = 0) { map_.reserve(expected); }

    void add(Monomial m, const Integer& k, bool negate = false)
    {
        if (m.exponent(kSlotSin) >= 2) {
            m.add(kSlotSin, -2);
            add(m, k, negate);
            m.add(kSlotCos, 2);
            add(m, k, !negate);
            return;
        }
        auto& slot = map_[m];
        if (negate)
            slot -= k;
        else
            slot += k;
    }

    void add_product(Monomial m, const Integer& a, const Integer& b)
    {
        if (m.exponent(kSlotSin) >= 2) {
            m.add(kSlotSin, -2);
            addmul(m, a, b, false);
            m.add(kSlotCos, 2);
            addmul(m, a, b, true);
            return;
        }
        addmul(m, a, b, false);
    }

    std::vector<Term> finish()
    {
        std::vector<Term> out;
        out.reserve(map_.size());
        for (auto& [m, k] : map_)
            if (k != 0) out.push_back({m, std::move(k)});
        std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
        return out;
    }

private:
    void addmul(const Monomial& m, const Integer& a, const Integer& b, bool negate)
    {
        auto& slot = map_[m];
        if (negate)
            mpz_submul(slot.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        else
            mpz_addmul(slot.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }

    std::unordered_map<Monomial, Integer, MonomialHash> map_;
};

// Merge of two sorted term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract)
{
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back({b[j].mono, subtract ? Integer(-b[j].coef) : b[j].coef});
            ++j;
        } else {
            Integer k = subtract ? Integer(a[i].coef - b[j].coef) : Integer(a[i].coef + b[j].coef);
            if (k != 0) out.push_back({a[i].mono, std::move(k)});
            ++i;
            ++j;
        }
    }
    return out;
}

// Multiplication by a sin-free monomial keeps the order of the terms.
std::vector<Term> shift_sorted(const std::vector<Term>& a, const Monomial& m)
{
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a) out.push_back({t.mono * m, t.coef});
    return out;
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// Value of p at a fixed pseudo-random point of the locus cos = 1/(r kappa).
// A nonzero result proves that delta does not divide p.
std::uint64_t residue_on_delta_locus(const std::vector<Term>& terms)
{
    std::array<std::uint64_t, kSlotCount> value{};
    std::uint64_t state = 0x243f6a8885a308d3ull;
    for (auto& v : value) {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        v = ((z ^ (z >> 31)) % (kPrime - 2)) + 2;
    }
    value[kSlotCos] = powmod(mulmod(value[kSlotRadius], value[kappa_slot(0)]), kPrime - 2);

    std::array<std::vector<std::uint64_t>, kSlotCount> powers;
    std::uint64_t total = 0;
    for (const auto& t : terms) {
        std::uint64_t acc = mpz_fdiv_ui(t.coef.get_mpz_t(), kPrime);
        for (int slot = 0; slot < kSlotCount && acc != 0; ++slot) {
            int e = t.mono.exponent(slot);
            if (e == 0) continue;
            auto& table = powers[slot];
            if (table.empty()) table.push_back(1);
            while (static_cast<int>(table.size()) <= e) table.push_back(mulmod(table.back(), value[slot]));
            acc = mulmod(acc, table[e]);
        }
        total += acc;
        if (total >= kPrime) total -= kPrime;
    }
    return total;
}

} // namespace

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(const Integer& k)
{
    if (k == 0) return {};
    return Poly({Term{Monomial{}, k}});
}

Poly Poly::monomial(const Monomial& m, const Integer& k)
{
    if (k == 0) return {};
    if (m.exponent(kSlotSin) >= 2) return from_terms({Term{m, k}});
    return Poly({Term{m, k}});
}

Poly Poly::delta()
{
    Monomial rkc;
    rkc.set(kSlotCos, 1);
    rkc.set(kSlotRadius, 1);
    rkc.set(kappa_slot(0), 1);
    return from_terms({Term{Monomial{}, 1}, Term{rkc, -1}});
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    Accumulator acc(terms.size());
    for (auto& t : terms) acc.add(t.mono, t.coef);
    return Poly(acc.finish());
}

Poly Poly::operator+(const Poly& other) const { return Poly(merge(terms_, other.terms_, false)); }

Poly Poly::operator-(const Poly& other) const { return Poly(merge(terms_, other.terms_, true)); }

Poly Poly::operator-() const
{
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coef = -t.coef;
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& other) const
{
    if (is_zero() || other.is_zero()) return {};
    if (other.size() == 1) return shifted(other.terms_[0].mono).scaled(other.terms_[0].coef);
    if (size() == 1) return other.shifted(terms_[0].mono).scaled(terms_[0].coef);
    Accumulator acc(std::max(size(), other.size()) * 4);
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) acc.add_product(a.mono * b.mono, a.coef, b.coef);
    return Poly(acc.finish());
}

Poly Poly::scaled(const Integer& k) const
{
    if (k == 0) return {};
    if (k == 1) return *this;
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coef *= k;
    return Poly(std::move(out));
}

Poly Poly::shifted(const Monomial& m) const
{
    if (m.is_one()) return *this;
    if (m.exponent(kSlotSin) == 0) return Poly(shift_sorted(terms_, m));
    Accumulator acc(terms_.size() * 2);
    for (const auto& t : terms_) acc.add(t.mono * m, t.coef);
    return Poly(acc.finish());
}

Poly Poly::times_delta(int times) const
{
    Monomial rkc;
    rkc.set(kSlotCos, 1);
    rkc.set(kSlotRadius, 1);
    rkc.set(kappa_slot(0), 1);
    std::vector<Term> cur = terms_;
    for (int i = 0; i < times; ++i) cur = merge(cur, shift_sorted(cur, rkc), true);
    return Poly(std::move(cur));
}

int Poly::min_exponent(int slot) const
{
    if (terms_.empty()) return 0;
    int m = kMaxExponent;
    for (const auto& t : terms_) m = std::min(m, t.mono.exponent(slot));
    return m;
}

int Poly::max_exponent(int slot) const
{
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.mono.exponent(slot));
    return m;
}

Poly Poly::divided_by_power(int slot, int e) const
{
    if (e == 0) return *this;
    std::vector<Term> out = terms_;
    for (auto& t : out) t.mono.add(slot, -e);
    return Poly(std::move(out));
}

std::optional<Poly> Poly::divide_by_delta() const
{
    if (is_zero()) return Poly{};
    const int degree = max_exponent(kSlotCos);
    if (degree == 0) return std::nullopt;
    if (residue_on_delta_locus(terms_) != 0) return std::nullopt;

    std::vector<std::vector<Term>> groups(static_cast<std::size_t>(degree) + 1);
    for (const auto& t : terms_) {
        Term stripped = t;
        int e = stripped.mono.exponent(kSlotCos);
        stripped.mono.set(kSlotCos, 0);
        groups[static_cast<std::size_t>(e)].push_back(std::move(stripped));
    }
    for (auto& g : groups)
        std::sort(g.begin(), g.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });

    Monomial rk;
    rk.set(kSlotRadius, 1);
    rk.set(kappa_slot(0), 1);

    // N = (1 - A c) Q  =>  Q_k = N_k + A Q_{k-1},  N_D + A Q_{D-1} = 0.
    std::vector<Term> quotient;
    std::vector<Term> previous;
    for (int k = 0; k < degree; ++k) {
        std::vector<Term> current = merge(groups[static_cast<std::size_t>(k)], shift_sorted(previous, rk), false);
        for (const auto& t : current) {
            Term withc = t;
            withc.mono.set(kSlotCos, k);
            quotient.push_back(std::move(withc));
        }
        previous = std::move(current);
    }
    if (!merge(groups[static_cast<std::size_t>(degree)], shift_sorted(previous, rk), false).empty()) return std::nullopt;
    std::sort(quotient.begin(), quotient.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
    return Poly(std::move(quotient));
}

Integer Poly::content() const
{
    Integer g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::divided_exactly(const Integer& k) const
{
    if (k == 1) return *this;
    std::vector<Term> out = terms_;
    for (auto& t : out) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), k.get_mpz_t());
    return Poly(std::move(out));
}

Poly Poly::partial(int slot) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int e = t.mono.exponent(slot);
        if (e == 0) continue;
        Term d = t;
        d.mono.set(slot, e - 1);
        d.coef *= e;
        out.push_back(std::move(d));
    }
    // Lowering one exponent uniformly can reorder only terms that differ in
    // that slot; resort to keep the invariant.
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
    return Poly(std::move(out));
}

bool operator==(const Poly& a, const Poly& b)
{
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

} // namespace chentype

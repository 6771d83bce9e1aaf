#pragma once

#include "chentype/symexpr/rational.hpp"
#include "chentype/symexpr/symbol.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace chentype {

// Slot layout of a monomial exponent vector:
//   0: cos(phi), 1: sin(phi), 2: r, 3 + 2i: kappa^(i), 4 + 2i: tau^(i).
inline constexpr int kSlotCount = 32;
inline constexpr int kSlotCos = 0;
inline constexpr int kSlotSin = 1;
inline constexpr int kSlotRadius = 2;
constexpr int kappa_slot(int order) { return 3 + 2 * order; }
constexpr int tau_slot(int order) { return 4 + 2 * order; }
inline constexpr int kMaxExponent = 127;

/// Slot of a polynomial variable. Delta has no slot (it is expanded).
int slot_of(Symbol s);
Symbol symbol_of_slot(int slot);

/// Exponent vector packed eight bytes per word. Exponents stay <= 127 so that
/// adding two vectors word-wise never carries between bytes.
class Monomial {
public:
    Monomial() = default;

    static Monomial of(int slot, int exponent = 1);

    int exponent(int slot) const
    {
        return static_cast<int>((words_[slot >> 3] >> (8 * (slot & 7))) & 0xffu);
    }
    void set(int slot, int exponent);
    void add(int slot, int delta) { set(slot, exponent(slot) + delta); }

    bool is_one() const { return words_[0] == 0 && words_[1] == 0 && words_[2] == 0 && words_[3] == 0; }

    /// Plain exponent addition, no sin^2 reduction.
    Monomial operator*(const Monomial& other) const;

    /// Highest slot with a nonzero exponent, -1 for the unit monomial.
    int highest_slot() const;

    std::size_t hash() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.words_ < b.words_; }

private:
    std::array<std::uint64_t, 4> words_{};
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial mono;
    Integer coef;
};

/// Polynomial with integer coefficients in the slot variables, kept reduced
/// modulo sin^2 + cos^2 - 1 (sin degree <= 1 in every term). Terms are sorted
/// by monomial and have nonzero coefficients.
class Poly {
public:
    Poly() = default;

    static Poly constant(const Integer& k);
    static Poly monomial(const Monomial& m, const Integer& k = 1);
    /// 1 - r*kappa*cos(phi).
    static Poly delta();

    /// Builds from unsorted, possibly repeated terms; reduces sin^2.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly operator*(const Poly& other) const;

    Poly scaled(const Integer& k) const;
    /// Multiplies by a monomial, reducing sin^2 when needed.
    Poly shifted(const Monomial& m) const;
    /// Multiplies by (1 - r*kappa*cos(phi))^times.
    Poly times_delta(int times = 1) const;

    int min_exponent(int slot) const;
    int max_exponent(int slot) const;
    /// Divides every monomial by slot^e; requires min_exponent(slot) >= e.
    Poly divided_by_power(int slot, int e) const;

    /// Quotient by 1 - r*kappa*cos(phi) when exact, nullopt otherwise.
    std::optional<Poly> divide_by_delta() const;

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;
    Poly divided_exactly(const Integer& k) const;

    /// Partial derivative with respect to one slot variable, treating the
    /// others as independent (no chain rule).
    Poly partial(int slot) const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    explicit Poly(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
    std::vector<Term> terms_;
};

} // namespace chentype

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace chentype {

/// Highest derivative order of kappa and tau the engine tracks.
inline constexpr int kMaxDerivativeOrder = 13;

enum class SymbolKind : std::uint8_t { CosPhi, SinPhi, Delta, Radius, Kappa, Tau };

/// Atom of the expression language. Kappa and Tau carry a derivative order
/// with respect to the spine parameter u.
struct Symbol {
    SymbolKind kind = SymbolKind::CosPhi;
    int order = 0;

    static constexpr Symbol cos_phi() { return {SymbolKind::CosPhi, 0}; }
    static constexpr Symbol sin_phi() { return {SymbolKind::SinPhi, 0}; }
    static constexpr Symbol delta() { return {SymbolKind::Delta, 0}; }
    static constexpr Symbol radius() { return {SymbolKind::Radius, 0}; }
    static constexpr Symbol kappa(int order = 0) { return {SymbolKind::Kappa, order}; }
    static constexpr Symbol tau(int order = 0) { return {SymbolKind::Tau, order}; }

    bool is_u_function() const { return kind == SymbolKind::Kappa || kind == SymbolKind::Tau; }

    /// Printable name; round-trips through parse_expr.
    std::string name() const;

    auto operator<=>(const Symbol&) const = default;
};

} // namespace chentype

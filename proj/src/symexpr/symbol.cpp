#include "chentype/symexpr/symbol.hpp"

namespace chentype {

std::string Symbol::name() const
{
    auto with_order = [this](std::string base) {
        if (order == 0) return base;
        if (order <= 3) return base + std::string(static_cast<std::size_t>(order), '\'');
        return base + "_" + std::to_string(order);
    };
    switch (kind) {
    case SymbolKind::CosPhi: return "cos(phi)";
    case SymbolKind::SinPhi: return "sin(phi)";
    case SymbolKind::Delta: return "delta";
    case SymbolKind::Radius: return "r";
    case SymbolKind::Kappa: return with_order("kappa");
    case SymbolKind::Tau: return with_order("tau");
    }
    return "?";
}

} // namespace chentype

#pragma once

#include "chentype/frames.hpp"
#include "chentype/symexpr.hpp"

namespace chentype::test {

/// Random expression trees inside the closed class: denominators are only
/// ever built from delta, cos(phi), kappa and r.
class ExprGen {
public:
    explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

    Expr expr(int depth)
    {
        if (depth <= 1) return leaf();
        switch (pick(6)) {
        case 0:
        case 1: return expr(depth - 1) + expr(depth - 1);
        case 2:
        case 3: return expr(depth - 1) * expr(depth - 1);
        case 4: return expr(depth - 1) * pow(pole(), -1 - static_cast<int>(pick(2)));
        default: return depth <= 3 ? pow(expr(depth - 1), 2) : expr(depth - 1) - leaf();
        }
    }

    Expr leaf()
    {
        switch (pick(9)) {
        case 0: return Expr(Rational(static_cast<long>(pick(9)) - 4, static_cast<long>(pick(3)) + 1));
        case 1: return cos_phi();
        case 2: return sin_phi();
        case 3: return delta();
        case 4: return radius();
        case 5: return kappa(static_cast<int>(pick(3)));
        case 6: return tau(static_cast<int>(pick(3)));
        case 7: return beta();
        default: return kappa() * cos_phi() - tau(1) * sin_phi();
        }
    }

    Expr pole()
    {
        switch (pick(4)) {
        case 0: return delta();
        case 1: return cos_phi();
        case 2: return kappa();
        default: return radius();
        }
    }

    FrameVec frame_vec(int depth) { return FrameVec(expr(depth), expr(depth), expr(depth)); }

    std::uint64_t pick(std::uint64_t n) { return rng_.next() % n; }
    Rng& rng() { return rng_; }

private:
    Rng rng_;
};

} // namespace chentype::test

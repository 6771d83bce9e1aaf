#pragma once

#include "chentype/symexpr/symbol.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace chentype {

/// Seeded generator with a portable uniform draw (std distributions are
/// implementation-defined, reports must be byte-identical across builds).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform in [-hi, -lo] U [lo, hi].
    double uniform_signed(double lo, double hi);

private:
    std::mt19937_64 engine_;
};

/// Values of every symbol at one parameter point (u, phi).
struct NumericProfile {
    double u = 0.0;
    double phi = 0.0;
    double r = 0.0;
    /// kappa[i] is the i-th u-derivative of the curvature.
    std::vector<double> kappa;
    std::vector<double> tau;

    double value(Symbol s) const;
    double delta() const;
};

/// Smooth curvature/torsion functions of u, with exact derivatives.
class SpineProfile {
public:
    enum class Kind { Default, Helix, Circle };

    /// kappa(u) = 2 + sin u, tau(u) = cos u.
    static SpineProfile default_profile();
    static SpineProfile helix(double kappa, double tau);
    /// Plane circle: constant kappa, tau = 0.
    static SpineProfile circle(double kappa);

    Kind kind() const { return kind_; }
    double kappa(int order, double u) const;
    double tau(int order, double u) const;
    double kappa0() const { return kappa0_; }
    double tau0() const { return tau0_; }

    NumericProfile at(double u, double phi, double r, int max_order = kMaxDerivativeOrder) const;

private:
    SpineProfile(Kind k, double kap, double tor) : kind_(k), kappa0_(kap), tau0_(tor) {}
    Kind kind_;
    double kappa0_;
    double tau0_;
};

/// Independent draws: kappa, tau and all derivatives from [-2,-0.1] U [0.1,2],
/// r from [0.05, 0.3], phi with |cos(phi)| >= 0.05.
NumericProfile random_profile(Rng& rng);

} // namespace chentype

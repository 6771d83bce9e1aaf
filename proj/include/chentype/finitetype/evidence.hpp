#pragma once

#include "chentype/beltrami/numeric.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace chentype {

/// Stratified draw: phi uniform in [0.1, pi/2 - 0.1] and [pi/2 + 0.1, pi - 0.1]
/// alternately, u cycling through 5 distinct values from [0, 3]. Points that
/// fail the domain guard are redrawn.
std::vector<SamplePoint> sample_points(const SurfaceChart& s, int count, Rng& rng);

/// Iterates of a field sampled in global coordinates: column k holds
/// Delta^k v at every point, three rows per point.
struct IterateMatrix {
    std::vector<SamplePoint> points;
    Eigen::MatrixXd columns;

    int max_power() const { return static_cast<int>(columns.cols()) - 1; }
};

IterateMatrix build_iterate_matrix(const BeltramiOp& op, const Vec& v, int k, std::vector<SamplePoint> points,
                                   bool spine_point = false);

/// Numerical rank of the first `cols` columns after scaling each to unit
/// norm: the number of column-pivoted QR pivots with |R_ii| >= tol |R_00|.
/// Throws IllConditionedSamples when a column or the largest pivot is below
/// 1e-12.
int independence_rank(const Eigen::MatrixXd& m, double tol = 1e-8);
int independence_rank(const IterateMatrix& m, int k, double tol = 1e-8);

/// Least-squares fit of
///   Delta^K v + sigma_1 Delta^{K-1} v + ... + sigma_K (v - c) = 0
/// with constant sigma_i and a free constant vector c. The rows of each
/// sample point are divided by |Delta^K v| there, so every point weighs the
/// same.
struct Annihilator {
    std::vector<double> sigma;
    /// sigma_K c; c itself is only defined when sigma_K != 0.
    std::array<double, 3> sigma_c{};
    /// Weighted |residual| / |Delta^K v|.
    double residual = 0.0;
    /// Roots of x^K + sigma_1 x^{K-1} + ... + sigma_K.
    std::vector<std::complex<double>> eigenvalues;
};

/// Throws PreconditionError for K < 1 or K beyond the matrix.
Annihilator annihilator_search(const IterateMatrix& m, int k);

/// Roots of the monic polynomial with the given lower coefficients.
std::vector<std::complex<double>> monic_roots(const std::vector<double>& sigma);

/// Residual below which an annihilator counts as found.
inline constexpr double kAnnihilatorThreshold = 1e-6;

struct TypeEvidence {
    /// Entry K-1 describes K = 1..k_max.
    std::vector<int> ranks;
    std::vector<double> residuals;
    std::vector<std::vector<std::complex<double>>> eigenvalues;
    /// Smallest K with an annihilator, if any.
    std::optional<int> finite_type;
    /// rank = K + 1 for every tested K.
    bool infinite_type_evidence = false;
    std::uint64_t seed = 0;
    int points = 0;
};

/// Rank and annihilator sequences for the Gauss map under Delta^II.
/// `points` of 0 means 10 (k_max + 1).
TypeEvidence type_evidence(const SurfaceChart& s, int k_max, std::uint64_t seed, int points = 0, double tol = 1e-8);

std::string describe(const TypeEvidence& e);

} // namespace chentype

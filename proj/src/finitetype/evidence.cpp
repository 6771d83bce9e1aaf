#include "chentype/finitetype/evidence.hpp"

#include "chentype/errors.hpp"

#include <cmath>
#include <numbers>

namespace chentype {

std::vector<SamplePoint> sample_points(const SurfaceChart& s, int count, Rng& rng)
{
    constexpr double pi = std::numbers::pi;
    constexpr int kDistinctU = 5;
    constexpr int kMaxDraws = 1000;
    std::array<double, kDistinctU> us{};
    for (auto& u : us) u = rng.uniform(0.0, 3.0);
    std::vector<SamplePoint> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const double lo = i % 2 == 0 ? 0.1 : pi / 2 + 0.1;
        const double hi = i % 2 == 0 ? pi / 2 - 0.1 : pi - 0.1;
        SamplePoint p{us[static_cast<std::size_t>(i % kDistinctU)], 0.0};
        int draws = 0;
        do {
            if (++draws > kMaxDraws) throw IllConditionedSamples("no admissible sample point found");
            p.phi = rng.uniform(lo, hi);
        } while (!admissible(s, p));
        out.push_back(p);
    }
    return out;
}

IterateMatrix build_iterate_matrix(const BeltramiOp& op, const Vec& v, int k, std::vector<SamplePoint> points,
                                   bool spine_point)
{
    if (k < 0) throw PreconditionError("iteration count must be non-negative");
    IterateMatrix m;
    m.columns.resize(3 * static_cast<Eigen::Index>(points.size()), k + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto values = numeric_iterates(op, v, points[i], k, spine_point);
        for (int col = 0; col <= k; ++col)
            for (int a = 0; a < 3; ++a)
                m.columns(3 * static_cast<Eigen::Index>(i) + a, col) = values[static_cast<std::size_t>(col)][static_cast<std::size_t>(a)];
    }
    m.points = std::move(points);
    return m;
}

namespace {

/// Copies the matrix with unit-norm columns; returns the original norms.
Eigen::VectorXd normalize_columns(Eigen::MatrixXd& a)
{
    Eigen::VectorXd norms(a.cols());
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        norms(j) = a.col(j).norm();
        if (!(norms(j) >= 1e-12)) throw IllConditionedSamples("column " + std::to_string(j) + " vanishes at the samples");
        a.col(j) /= norms(j);
    }
    return norms;
}

} // namespace

int independence_rank(const Eigen::MatrixXd& m, double tol)
{
    if (!(tol > 0)) throw PreconditionError("rank tolerance must be positive");
    Eigen::MatrixXd a = m;
    normalize_columns(a);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd r = qr.matrixR().triangularView<Eigen::Upper>();
    const Eigen::Index n = std::min(r.rows(), r.cols());
    if (n == 0) return 0;
    const double largest = std::abs(r(0, 0));
    if (largest < 1e-12) throw IllConditionedSamples("largest pivot below 1e-12; resample");
    int rank = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(r(i, i)) >= tol * largest) ++rank;
    return rank;
}

int independence_rank(const IterateMatrix& m, int k, double tol)
{
    if (k < 0 || k > m.max_power()) throw PreconditionError("rank requested beyond the computed iterates");
    return independence_rank(Eigen::MatrixXd(m.columns.leftCols(k + 1)), tol);
}

std::vector<std::complex<double>> monic_roots(const std::vector<double>& sigma)
{
    const auto k = static_cast<Eigen::Index>(sigma.size());
    if (k == 0) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) companion(0, j) = -sigma[static_cast<std::size_t>(j)];
    for (Eigen::Index i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    std::vector<std::complex<double>> out;
    for (Eigen::Index i = 0; i < k; ++i) out.push_back(es.eigenvalues()(i));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
    });
    return out;
}

Annihilator annihilator_search(const IterateMatrix& m, int k)
{
    if (k < 1) throw PreconditionError("annihilator degree must be at least 1");
    if (k > m.max_power()) throw PreconditionError("annihilator degree exceeds the computed iterates");
    const Eigen::Index rows = m.columns.rows();
    // Unknowns: sigma_1..sigma_K, then sigma_K c.
    Eigen::MatrixXd a(rows, k + 3);
    for (int i = 1; i <= k; ++i) a.col(i - 1) = m.columns.col(k - i);
    a.rightCols(3).setZero();
    for (Eigen::Index row = 0; row < rows; ++row) a(row, k + row % 3) = -1.0;
    Eigen::VectorXd b = -m.columns.col(k);
    // Each point is scaled by the size of its highest iterate, so that the
    // few points closest to the poles do not dominate the fit. Exact
    // relations survive any positive row scaling.
    for (Eigen::Index p = 0; p < rows / 3; ++p) {
        const double w = b.segment<3>(3 * p).norm();
        if (w < 1e-300) continue;
        a.middleRows<3>(3 * p) /= w;
        b.segment<3>(3 * p) /= w;
    }
    const double bnorm = b.norm();
    if (bnorm < 1e-12) throw IllConditionedSamples("highest iterate vanishes at the samples");

    Eigen::MatrixXd scaled = a;
    const Eigen::VectorXd norms = normalize_columns(scaled);
    const Eigen::VectorXd y = scaled.colPivHouseholderQr().solve(b);
    const Eigen::VectorXd x = y.cwiseQuotient(norms);

    Annihilator out;
    for (int i = 0; i < k; ++i) out.sigma.push_back(x(i));
    for (int j = 0; j < 3; ++j) out.sigma_c[static_cast<std::size_t>(j)] = x(k + j);
    out.residual = (scaled * y - b).norm() / bnorm;
    out.eigenvalues = monic_roots(out.sigma);
    return out;
}

TypeEvidence type_evidence(const SurfaceChart& s, int k_max, std::uint64_t seed, int points, double tol)
{
    if (k_max < 1) throw PreconditionError("k_max must be at least 1");
    if (points <= 0) points = 10 * (k_max + 1);
    Rng rng(seed);
    const BeltramiOp op(s, FormKind::II);
    const IterateMatrix m = build_iterate_matrix(op, gauss_map(s), k_max, sample_points(s, points, rng));
    TypeEvidence e;
    e.seed = seed;
    e.points = points;
    e.infinite_type_evidence = true;
    for (int k = 1; k <= k_max; ++k) {
        const int rank = independence_rank(m, k, tol);
        const Annihilator ann = annihilator_search(m, k);
        e.ranks.push_back(rank);
        e.residuals.push_back(ann.residual);
        e.eigenvalues.push_back(ann.eigenvalues);
        if (rank != k + 1) e.infinite_type_evidence = false;
        if (!e.finite_type && ann.residual < kAnnihilatorThreshold) e.finite_type = k;
    }
    return e;
}

std::string describe(const TypeEvidence& e)
{
    if (e.finite_type) return "FiniteTypeCandidate(" + std::to_string(*e.finite_type) + ")";
    if (e.infinite_type_evidence) return "InfiniteTypeEvidence";
    return "Inconclusive";
}

} // namespace chentype

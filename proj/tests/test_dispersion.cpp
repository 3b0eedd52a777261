#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "kgwave/dispersion.hpp"

using namespace kgwave;

namespace {

// Group velocity from a centered difference of the real branch.
double fd_velocity(int branch, double w, const WaveguideParams& p)
{
    const double h = 1e-5 * w;
    return 2.0 * h / (real_branch_k(branch, w + h, p).real() - real_branch_k(branch, w - h, p).real());
}

// Extremum of fd_velocity on [a, b] by golden-section search.
double golden_extremum(int branch, double a, double b, double sign, const WaveguideParams& p)
{
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    for (int i = 0; i < 80; ++i) {
        if (sign * fd_velocity(branch, c, p) > sign * fd_velocity(branch, d, p)) {
            b = d;
        } else {
            a = c;
        }
        c = b - g * (b - a);
        d = a + g * (b - a);
    }
    return fd_velocity(branch, 0.5 * (a + b), p);
}

} // namespace

TEST(Dispersion, RootsSatisfyDispersionRelation)
{
    const auto p = default_preset();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> re(0.1, 20.0);
    std::uniform_real_distribution<double> im(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        const cplx w(re(rng), im(rng));
        for (cplx k : roots_k(w, p)) {
            const double scale = std::pow(std::abs(w) + std::abs(k) + 1.0, 4);
            EXPECT_LT(std::abs(dispersion_D(w, k, p)), 1e-12 * scale);
        }
    }
}

TEST(Dispersion, CutoffsSolveZeroWavenumber)
{
    const auto p = default_preset();
    const auto cuts = cutoff_frequencies(p);
    for (double w : cuts) {
        EXPECT_LT(std::fabs(dispersion_D(w, 0.0, p)), 1e-12);
    }
    EXPECT_LT(cuts[0], p.omega1);
    EXPECT_GT(cuts[1], p.omega2);
}

TEST(Dispersion, RealBranchesAreOrderedAndMonotone)
{
    const auto p = default_preset();
    const double top = std::max(branch_cutoff(1, p), branch_cutoff(2, p));
    double prev1 = 0.0;
    double prev2 = 0.0;
    for (int i = 1; i <= 300; ++i) {
        const double w = top + 0.05 * i;
        const double k1 = real_branch_k(1, w, p).real();
        const double k2 = real_branch_k(2, w, p).real();
        EXPECT_LT(k1, k2);
        EXPECT_GT(k1, prev1);
        EXPECT_GT(k2, prev2);
        prev1 = k1;
        prev2 = k2;
    }
}

TEST(Dispersion, UncoupledBranchesFollowTheModes)
{
    const auto p = default_preset().with_mu(0.0);
    for (double w : {3.6, 4.5, 5.1, 5.2, 7.0, 12.0}) {
        EXPECT_NEAR(real_branch_k(1, w, p).real(), std::sqrt(w * w - 9.0) / 2.0, 1e-12);
        EXPECT_NEAR(real_branch_k(2, w, p).real(), std::sqrt(w * w - 12.25) / 1.8, 1e-12);
    }
}

TEST(Dispersion, GroupVelocityMatchesFiniteDifference)
{
    const auto p = default_preset();
    for (int branch : {1, 2}) {
        for (double w : {3.8, 4.5, 5.0, 5.1, 5.3, 6.0, 9.0}) {
            const double vg = group_velocity_at(w, real_branch_k(branch, w, p), p).real();
            EXPECT_NEAR(vg, fd_velocity(branch, w, p), 1e-7 * std::fabs(vg));
        }
    }
}

TEST(Dispersion, GroupVelocityBelowLayerSpeeds)
{
    const auto p = default_preset();
    for (const auto& row : sample_diagram(p, 3.6, 40.0, 200)) {
        EXPECT_GT(row.vg1, 0.0);
        EXPECT_GT(row.vg2, 0.0);
        EXPECT_LT(row.vg1, p.c1);
        EXPECT_LT(row.vg2, p.c1);
    }
}

TEST(Dispersion, SeriesDerivativesMatchFiniteDifferences)
{
    const auto p = default_preset();
    BranchFunction b(2, p);
    const double w = 5.3;
    const auto s = b.series<3>(w);
    const double h = 1e-3;
    auto k = [&](double x) { return real_branch_k(2, x, p).real(); };
    EXPECT_NEAR(s.derivative(0).real(), k(w), 1e-13);
    EXPECT_NEAR(s.derivative(1).real(), (k(w + h) - k(w - h)) / (2 * h), 1e-6);
    EXPECT_NEAR(s.derivative(2).real(), (k(w + h) - 2 * k(w) + k(w - h)) / (h * h), 1e-5);
    EXPECT_NEAR(s.derivative(3).real(), (k(w + 2 * h) - 2 * k(w + h) + 2 * k(w - h) - k(w - 2 * h)) / (2 * h * h * h),
                1e-3);
}

TEST(Dispersion, BranchFunctionContinuesIntoComplexPlane)
{
    const auto p = default_preset();
    BranchFunction b(1, p);
    for (double im : {0.01, 0.1, 0.3}) {
        const cplx w(6.0, im);
        const cplx k = b.evaluate(w);
        EXPECT_LT(std::abs(dispersion_D(w, k, p)), 1e-9);
        // continuity with the real branch for small imaginary parts
        EXPECT_LT(std::abs(k - real_branch_k(1, 6.0, p)), 2.0 * im);
    }
}

TEST(Dispersion, ExchangeBranchPointsAreDoubleRoots)
{
    const auto p = default_preset();
    const auto pts = exchange_branch_points(p);
    ASSERT_FALSE(pts.empty());
    for (cplx w : pts) {
        const auto K = k_squared_roots(w, p);
        EXPECT_LT(std::abs(K[0] - K[1]), 1e-6 * std::abs(K[0]));
        const cplx k = std::sqrt(0.5 * (K[0] + K[1]));
        EXPECT_LT(std::abs(dispersion_D(w, k, p)) + std::abs(dispersion_dk(w, k, p)), 1e-10);
    }
    // conjugate pairs
    for (cplx w : pts) {
        const bool has_conj = std::any_of(pts.begin(), pts.end(), [&](cplx v) { return std::abs(v - std::conj(w)) < 1e-10; });
        EXPECT_TRUE(has_conj);
    }
}

TEST(Dispersion, GroupVelocityExtremaMatchGoldenSearch)
{
    const auto p = default_preset();
    const auto e = group_velocity_extrema(p);
    EXPECT_EQ(e.maximum.kind, ExtremumRecord::Kind::Maximum);
    EXPECT_EQ(e.minimum.kind, ExtremumRecord::Kind::Minimum);
    EXPECT_NEAR(e.maximum.velocity, golden_extremum(e.maximum.branch, 4.5, 5.1, 1.0, p), 1e-8);
    EXPECT_NEAR(e.minimum.velocity, golden_extremum(e.minimum.branch, 5.2, 5.8, -1.0, p), 1e-8);
    EXPECT_NEAR(e.maximum.velocity, 1.497922, 1e-6);
    EXPECT_NEAR(e.minimum.velocity, 1.442726, 1e-6);
    EXPECT_LT(e.maximum.alpha, 0.0);
    EXPECT_GT(e.minimum.alpha, 0.0);
    const auto cp = shestopalov(p);
    EXPECT_LT(cp.v2, e.minimum.velocity);
    EXPECT_LT(e.minimum.velocity, e.maximum.velocity);
    EXPECT_LT(e.maximum.velocity, cp.v1);
}

TEST(Dispersion, NoExtremaWithoutCoupling)
{
    try {
        group_velocity_extrema(default_preset().with_mu(0.0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ExtremumNotFound);
    }
}

TEST(Dispersion, SampleDiagramShape)
{
    const auto p = default_preset();
    const auto rows = sample_diagram(p, 3.6, 12.0, 101);
    ASSERT_EQ(rows.size(), 101u);
    EXPECT_DOUBLE_EQ(rows.front().omega, 3.6);
    EXPECT_DOUBLE_EQ(rows.back().omega, 12.0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_GT(rows[i].k1, rows[i - 1].k1);
        EXPECT_GT(rows[i].k2, rows[i - 1].k2);
    }
    EXPECT_THROW(sample_diagram(p, 3.0, 12.0, 10), Error);
    EXPECT_THROW(sample_diagram(p, 4.0, 3.9, 10), Error);
}

TEST(Dispersion, UncoupledCurvesCrossAtShestopalovPoint)
{
    const auto p = default_preset().with_mu(0.0);
    const auto cp = shestopalov(p);
    EXPECT_NEAR(real_branch_k(1, cp.omega_sh, p).real(), cp.k_sh, 1e-12);
    EXPECT_NEAR(real_branch_k(2, cp.omega_sh, p).real(), cp.k_sh, 1e-12);
}

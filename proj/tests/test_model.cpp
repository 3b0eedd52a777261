#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "kgwave/model.hpp"

using namespace kgwave;

namespace {

// Crossing of the two unperturbed curves found by bisection on their frequency gap.
double crossing_k(const WaveguideParams& p)
{
    auto gap = [&](double k) {
        return std::sqrt(p.omega1 * p.omega1 + p.c1 * p.c1 * k * k) -
               std::sqrt(p.omega2 * p.omega2 + p.c2 * p.c2 * k * k);
    };
    double lo = 0.0;
    double hi = 100.0;
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (lo + hi);
        (gap(m) < 0.0 ? lo : hi) = m;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST(Model, PresetValues)
{
    const auto p = default_preset();
    EXPECT_EQ(p.c1, 2.0);
    EXPECT_EQ(p.c2, 1.8);
    EXPECT_EQ(p.omega1, 3.0);
    EXPECT_EQ(p.omega2, 3.5);
    EXPECT_EQ(p.mu, 0.5);
    EXPECT_EQ(p.f1, 1.0);
    EXPECT_EQ(p.f2, 0.0);
    EXPECT_EQ(p.with_mu(0.1).mu, 0.1);
    EXPECT_EQ(p.with_mu(0.1).c1, 2.0);
}

TEST(Model, ShestopalovPointMatchesCurveCrossing)
{
    const auto p = default_preset();
    const auto cp = shestopalov(p);
    const double k = crossing_k(p);
    const double w = std::sqrt(p.omega1 * p.omega1 + p.c1 * p.c1 * k * k);
    EXPECT_NEAR(cp.k_sh, k, 1e-12);
    EXPECT_NEAR(cp.omega_sh, w, 1e-12);
    // unperturbed group velocities c_j^2 k / omega
    EXPECT_NEAR(cp.v1, p.c1 * p.c1 * k / w, 1e-12);
    EXPECT_NEAR(cp.v2, p.c2 * p.c2 * k / w, 1e-12);
    EXPECT_NEAR(cp.omega_sh, 5.109331, 1e-6);
    EXPECT_NEAR(cp.k_sh, 2.067925, 1e-6);
    EXPECT_NEAR(cp.v1, 1.618940, 1e-6);
    EXPECT_NEAR(cp.v2, 1.311342, 1e-6);
}

TEST(Model, DispersionAtShestopalovPointIsMinusMuSquared)
{
    for (double mu : {0.0, 0.1, 0.5, 1.3}) {
        const auto p = default_preset().with_mu(mu);
        const auto cp = shestopalov(p);
        EXPECT_NEAR(dispersion_D(cp.omega_sh, cp.k_sh, p), -mu * mu, 1e-12);
    }
}

TEST(Model, DerivativesMatchFiniteDifferences)
{
    const auto p = default_preset();
    const cplx w(4.3, 0.2);
    const cplx k(1.7, -0.1);
    const double h = 1e-6;
    const cplx dk_fd = (dispersion_D(w, k + h, p) - dispersion_D(w, k - h, p)) / (2.0 * h);
    const cplx dw_fd = (dispersion_D(w + h, k, p) - dispersion_D(w - h, k, p)) / (2.0 * h);
    EXPECT_LT(std::abs(dispersion_dk(w, k, p) - dk_fd), 1e-6 * std::abs(dk_fd));
    EXPECT_LT(std::abs(dispersion_domega(w, k, p) - dw_fd), 1e-6 * std::abs(dw_fd));
}

TEST(Model, AmplitudeIsAdjugateTimesExcitation)
{
    auto p = default_preset();
    p.f1 = 0.7;
    p.f2 = -0.4;
    const double w = 4.1;
    const double k = 1.2;
    const double p1 = w * w - p.c1 * p.c1 * k * k - p.omega1 * p.omega1;
    const double p2 = w * w - p.c2 * p.c2 * k * k - p.omega2 * p.omega2;
    const auto a = amplitude_A(w, k, p);
    EXPECT_NEAR(a[0], p2 * p.f1 - p.mu * p.f2, 1e-14);
    EXPECT_NEAR(a[1], p1 * p.f2 - p.mu * p.f1, 1e-14);
    // [[p1, mu], [mu, p2]] A = D f
    EXPECT_NEAR(p1 * a[0] + p.mu * a[1], dispersion_D(w, k, p) * p.f1, 1e-12);
    EXPECT_NEAR(p.mu * a[0] + p2 * a[1], dispersion_D(w, k, p) * p.f2, 1e-12);
}

TEST(Model, ValidationRejectsBadParameters)
{
    auto expect_code = [](WaveguideParams p, ErrorCode code) {
        try {
            validate(p);
            FAIL() << "expected an error";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), code);
        }
    };
    auto p = default_preset();
    p.c1 = -1.0;
    expect_code(p, ErrorCode::NonPositiveParameter);
    p = default_preset();
    p.mu = -0.1;
    expect_code(p, ErrorCode::NonPositiveParameter);
    p = default_preset();
    p.c2 = 2.5;
    expect_code(p, ErrorCode::OrderingViolation);
    p = default_preset();
    p.omega1 = 4.0;
    expect_code(p, ErrorCode::OrderingViolation);
    p = default_preset();
    p.omega2 = std::numeric_limits<double>::quiet_NaN();
    expect_code(p, ErrorCode::NonFiniteParameter);
}

TEST(Model, PresetIsSlowExchange)
{
    const auto v = validate(default_preset());
    EXPECT_TRUE(v.fully_supported());
    EXPECT_TRUE(v.warnings.empty());
    EXPECT_LT(v.points.v1, default_preset().c2);
}

TEST(Model, ShestopalovNeedsDistinctSpeeds)
{
    auto p = default_preset();
    p.c2 = p.c1;
    EXPECT_THROW(shestopalov(p), Error);
}

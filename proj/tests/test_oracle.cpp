#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "kgwave/oracle.hpp"

using namespace kgwave;

TEST(Oracle, ScalarExactMatchesBesselClosedForm)
{
    for (double t : {2.0, 9.0, 31.0}) {
        for (double x : {0.0, 3.0, 10.0}) {
            const double c = 2.0;
            const double w = 3.0;
            const double arg = t * t - x * x / (c * c);
            const double ref = arg > 0.0 ? -boost::math::cyl_bessel_j(0, w * std::sqrt(arg)) / (2.0 * c) : 0.0;
            EXPECT_NEAR(scalar_kg_exact(t, x, c, w), ref, 1e-12);
        }
    }
}

TEST(Oracle, UncoupledModalIntegralIsScalarSolution)
{
    const auto p = default_preset().with_mu(0.0);
    for (double t : {5.0, 12.0, 33.0}) {
        for (double r : {0.15, 0.5, 0.85}) {
            const double x = r * p.c1 * t;
            const auto o = field_modal_integral(t, x, p);
            ASSERT_TRUE(o.converged);
            const double exact = scalar_kg_exact(t, x, p.c1, p.omega1);
            EXPECT_NEAR(o.u[0].real(), exact, 1e-8 * std::max(std::fabs(exact), field_scale(p)));
            EXPECT_NEAR(o.u[1].real(), 0.0, 1e-10);
        }
    }
}

TEST(Oracle, SecondLayerExcitationUsesSecondMode)
{
    auto p = default_preset().with_mu(0.0);
    p.f1 = 0.0;
    p.f2 = 1.0;
    const double t = 14.0;
    const double x = 11.0;
    const auto o = field_modal_integral(t, x, p);
    EXPECT_NEAR(o.u[1].real(), scalar_kg_exact(t, x, p.c2, p.omega2), 1e-8);
    EXPECT_NEAR(o.u[0].real(), 0.0, 1e-10);
}

TEST(Oracle, CausalityAndSupersonicSilence)
{
    const auto p = default_preset();
    const double scale = field_scale(p);
    for (double t : {-30.0, -3.0}) {
        const auto o = field_modal_integral(t, 10.0, p);
        EXPECT_LT(std::hypot(o.u[0].real(), o.u[1].real()), 1e-6 * scale);
    }
    for (double V : {2.2, 3.0}) {
        const auto o = field_modal_integral(20.0, 20.0 * V, p);
        EXPECT_LT(std::hypot(o.u[0].real(), o.u[1].real()), 1e-6 * scale);
    }
}

TEST(Oracle, TwoSidedIntegralIsRealAndAgrees)
{
    const auto p = default_preset();
    QuadratureControls two;
    two.two_sided = true;
    const auto a = field_modal_integral(30.0, 40.0, p);
    const auto b = field_modal_integral(30.0, 40.0, p, two);
    for (int j = 0; j < 2; ++j) {
        EXPECT_NEAR(a.u[j].real(), b.u[j].real(), 1e-8);
        EXPECT_NEAR(b.u[j].imag(), 0.0, 1e-8);
    }
}

TEST(Oracle, ResultStableUnderLineShift)
{
    const auto p = default_preset();
    QuadratureControls lower;
    lower.epsilon = 1e-4;
    const auto a = field_modal_integral(25.0, 35.0, p);
    const auto b = field_modal_integral(25.0, 35.0, p, lower);
    for (int j = 0; j < 2; ++j) {
        EXPECT_NEAR(a.u[j].real(), b.u[j].real(), 1e-7);
    }
}

TEST(Oracle, ScalarFarFieldAsymptotics)
{
    const double c = 2.0;
    const double w = 3.0;
    for (double t : {20.0, 80.0, 300.0}) {
        const double x = 0.5 * c * t;
        const double z = w * std::sqrt(t * t - x * x / (c * c));
        const double err = std::fabs(scalar_kg_far(t, x, c, w) - scalar_kg_exact(t, x, c, w));
        EXPECT_LT(err, 0.2 / (2.0 * c * std::pow(z, 1.5)));
    }
    try {
        scalar_kg_far(1.0, 1.9, c, w);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OutsideFarZone);
    }
}

TEST(Oracle, CutLoopIsBessel)
{
    for (double beta : {0.5, 3.0, 20.0}) {
        for (double frac : {-0.9, 0.0, 0.6}) {
            const double a = frac * beta;
            const auto q = cut_loop_integral(a, beta, 1e-13);
            ASSERT_TRUE(q.converged);
            const cplx ref(0.0, 2.0 * pi * boost::math::cyl_bessel_j(0, std::sqrt(beta * beta - a * a)));
            EXPECT_LT(std::abs(q.value - ref), 1e-11);
        }
    }
}

TEST(Oracle, InvalidInputs)
{
    const auto p = default_preset();
    EXPECT_THROW(field_modal_integral(10.0, 0.0, p), Error);
    QuadratureControls bad;
    bad.epsilon = 0.0;
    EXPECT_THROW(field_modal_integral(10.0, 5.0, p, bad), Error);
    try {
        j_int_quadrature(10.0, 1.0, p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OutsideWedge);
    }
}

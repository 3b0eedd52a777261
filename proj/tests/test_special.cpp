#include <cmath>

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "kgwave/special.hpp"

using namespace kgwave;

TEST(Special, KnownValues)
{
    EXPECT_DOUBLE_EQ(bessel_j0(0.0), 1.0);
    EXPECT_NEAR(airy_ai(0.0), 0.35502805388781723926, 1e-15);
    EXPECT_NEAR(bessel_j0(2.404825557695773), 0.0, 1e-13);
    EXPECT_NEAR(bessel_j0(5.520078110286311), 0.0, 1e-13);
    EXPECT_NEAR(airy_ai(-2.338107410459767), 0.0, 1e-13);
    EXPECT_NEAR(airy_ai(-4.087949444130971), 0.0, 1e-13);
}

TEST(Special, BesselJ0MatchesBoostOnWideRange)
{
    for (int i = 0; i <= 4000; ++i) {
        const double z = -60.0 + 120.0 * i / 4000.0;
        EXPECT_NEAR(bessel_j0(z), boost::math::cyl_bessel_j(0, z), 1e-11) << "z = " << z;
    }
}

TEST(Special, AiryMatchesBoostOnWideRange)
{
    for (int i = 0; i <= 4000; ++i) {
        const double z = -40.0 + 60.0 * i / 4000.0;
        const double ref = boost::math::airy_ai(z);
        EXPECT_NEAR(airy_ai(z), ref, 1e-11 + 1e-9 * std::fabs(ref)) << "z = " << z;
    }
}

TEST(Special, BesselJ0IsEven)
{
    for (double z : {0.3, 7.9, 12.0, 33.3}) {
        EXPECT_EQ(bessel_j0(z), bessel_j0(-z));
    }
}

TEST(Special, ContinuousAcrossSeams)
{
    for (double seam : {-8.0, 8.0, 12.0, -12.0}) {
        const double d = 1e-13;
        EXPECT_NEAR(airy_ai(seam - d), airy_ai(seam + d), 1e-11);
        EXPECT_NEAR(bessel_j0(seam - d), bessel_j0(seam + d), 1e-11);
    }
}

TEST(Special, AiryDecaysAndStaysPositive)
{
    double prev = airy_ai(0.0);
    for (double z = 0.5; z < 30.0; z += 0.5) {
        const double v = airy_ai(z);
        EXPECT_GT(v, 0.0);
        EXPECT_LT(v, prev);
        prev = v;
    }
}

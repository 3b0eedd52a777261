#include <cmath>

#include <gtest/gtest.h>

#include "kgwave/saddle.hpp"

using namespace kgwave;

namespace {

std::vector<int> indices(const std::vector<SaddlePoint>& s)
{
    std::vector<int> out;
    for (const auto& sp : s) out.push_back(sp.index);
    return out;
}

} // namespace

TEST(Saddle, CountsPerRegime)
{
    const auto p = default_preset();
    EXPECT_EQ(indices(find_real_saddles(0.5, p)), (std::vector<int>{1, 2}));
    EXPECT_EQ(indices(find_real_saddles(1.4651, p)), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(indices(find_real_saddles(1.6, p)), (std::vector<int>{1, 4}));
    EXPECT_EQ(indices(find_real_saddles(1.9, p)), (std::vector<int>{1}));
    EXPECT_TRUE(find_real_saddles(2.1, p).empty());
}

TEST(Saddle, RealSaddlesAreStationaryPoints)
{
    const auto p = default_preset();
    for (double V : {0.3, 1.0, 1.44, 1.4651, 1.49, 1.7, 1.95}) {
        for (const auto& sp : find_real_saddles(V, p)) {
            ASSERT_TRUE(sp.is_real);
            const double vg = real_group_velocity(sp.branch, sp.omega_star.real(), p);
            EXPECT_NEAR(vg, V, 1e-9) << "V = " << V << " index " << sp.index;
            EXPECT_LT(std::abs(dispersion_D(sp.omega_star, sp.k_star, p)), 1e-9);
        }
    }
}

TEST(Saddle, StationaryPhaseIsLinearInTime)
{
    const auto p = default_preset();
    const double V = 1.4651;
    const auto s = find_real_saddles(V, p);
    ASSERT_EQ(s.size(), 4u);
    for (double t : {10.0, 77.0, 300.0}) {
        EXPECT_NEAR(phase_difference(s[0], s[2], 2.0 * t, 2.0 * V * t), 2.0 * phase_difference(s[0], s[2], t, V * t),
                    1e-9 * t);
    }
    EXPECT_DOUBLE_EQ(phase_difference(s[1], s[2], 50.0, 50.0 * V), phase_difference(s[2], s[1], 50.0, 50.0 * V));
}

TEST(Saddle, ComplexSaddlesContinueMergedPairs)
{
    const auto p = default_preset();
    const auto e = group_velocity_extrema(p);
    for (double V : {1.52, 1.6, 1.75}) {
        const auto c = find_complex_saddles(V, p);
        ASSERT_EQ(c.size(), 1u);
        EXPECT_EQ(c[0].index, 5);
        EXPECT_FALSE(c[0].is_real);
        EXPECT_GT(phase_g(c[0], V).imag(), 0.0);
        EXPECT_NEAR(std::abs(group_velocity_at(c[0].omega_star, c[0].k_star, p) - V), 0.0, 1e-8);
    }
    for (double V : {0.8, 1.3, 1.43}) {
        const auto c = find_complex_saddles(V, p);
        ASSERT_EQ(c.size(), 1u);
        EXPECT_EQ(c[0].index, 6);
        EXPECT_GT(phase_g(c[0], V).imag(), 0.0);
        EXPECT_NEAR(std::abs(group_velocity_at(c[0].omega_star, c[0].k_star, p) - V), 0.0, 1e-8);
    }
    EXPECT_TRUE(find_complex_saddles(0.5 * (e.minimum.velocity + e.maximum.velocity), p).empty());
    EXPECT_TRUE(find_complex_saddles(1.9, p).empty());
}

TEST(Saddle, ComplexSaddleApproachesRealAxisAtMerge)
{
    const auto p = default_preset();
    const auto e = group_velocity_extrema(p);
    const auto near = find_complex_saddles(e.minimum.velocity - 1e-4, p);
    const auto far = find_complex_saddles(e.minimum.velocity - 1e-2, p);
    EXPECT_LT(std::fabs(near[0].omega_star.imag()), std::fabs(far[0].omega_star.imag()));
    EXPECT_NEAR(near[0].omega_star.real(), e.minimum.omega, 0.05);
}

TEST(Saddle, DoubleRootAtExtremalVelocity)
{
    const auto p = default_preset();
    const auto e = group_velocity_extrema(p);
    EXPECT_EQ(indices(find_real_saddles(e.minimum.velocity, p)), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(indices(find_real_saddles(e.maximum.velocity, p)), (std::vector<int>{1, 2, 3, 4}));
}

TEST(Saddle, DoiIntervalWidth)
{
    SaddlePoint sp;
    sp.alpha = cplx(0.5, 0.0);
    const auto d = doi_interval(sp, 100.0, 3.0);
    EXPECT_NEAR(d.a2, std::sqrt(2.0 * 3.0 / (100.0 * 0.5)), 1e-15);
    EXPECT_NEAR(d.a1, -d.a2, 1e-15);
    EXPECT_NEAR(d.direction, 0.25 * pi, 1e-15);
    sp.alpha = cplx(-0.5, 0.0);
    EXPECT_NEAR(doi_interval(sp, 100.0, 3.0).direction, 0.25 * pi - 0.5 * pi, 1e-15);
    // the width shrinks like x^(-1/2)
    EXPECT_NEAR(doi_interval(sp, 400.0, 3.0).a2, 0.5 * doi_interval(sp, 100.0, 3.0).a2, 1e-15);
    sp.alpha = 0.0;
    try {
        doi_interval(sp, 100.0, 3.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateCurvature);
    }
}

TEST(Saddle, NeighborGraph)
{
    EXPECT_TRUE(are_neighbors(2, 3));
    EXPECT_TRUE(are_neighbors(3, 4));
    EXPECT_TRUE(are_neighbors(1, 3));
    EXPECT_TRUE(are_neighbors(3, 1));
    EXPECT_FALSE(are_neighbors(1, 2));
    EXPECT_FALSE(are_neighbors(1, 4));
    EXPECT_FALSE(are_neighbors(2, 4));
    EXPECT_FALSE(are_neighbors(3, 3));
    EXPECT_TRUE(are_neighbors(5, 1));
    EXPECT_TRUE(are_neighbors(6, 1));
    EXPECT_TRUE(are_neighbors(5, 4));
}

TEST(Saddle, OverlapDissolvesWithTime)
{
    const auto p = default_preset();
    const double V = 1.4651;
    const auto s = find_real_saddles(V, p);
    bool overlapped = true;
    for (double t = 1.0; t < 5000.0; t *= 1.1) {
        const bool now = neighbors_overlap(s[1], s[2], t, V * t, 3.0);
        if (!overlapped) EXPECT_FALSE(now) << "t = " << t;
        overlapped = now;
    }
    EXPECT_FALSE(overlapped);
}

TEST(Saddle, RejectsNonPositiveVelocity)
{
    EXPECT_THROW(find_real_saddles(0.0, default_preset()), Error);
    EXPECT_THROW(find_complex_saddles(-1.0, default_preset()), Error);
}

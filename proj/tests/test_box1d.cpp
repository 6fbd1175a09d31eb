#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "diracbox/box1d.hpp"
#include "diracbox/units.hpp"
#include "oracle.hpp"

using namespace diracbox;

namespace {

// Grid-scan roots of tan x = -x / lambda.
constexpr double kLambda1First = 2.028757838110434;
constexpr double kLambda10First = 2.8627725875152077;
constexpr double kLambda10Second = 5.760557932709098;

} // namespace

TEST(Solve1DMode, UnitBoxGround)
{
    const Mode1D m = solve_1d_mode(1.0, 1);
    EXPECT_EQ(m.n, 1);
    EXPECT_NEAR(m.x, kLambda1First, 1e-10);
    EXPECT_NEAR(m.epsilon, 2.2619, 1e-3);
    EXPECT_NEAR(m.u, m.x / 1.0, 1e-12);
    EXPECT_NEAR(m.epsilon, std::sqrt(1.0 + m.u * m.u), 1e-12);
    EXPECT_LE(m.residual, 1e-10);
}

TEST(Solve1DMode, Limits)
{
    EXPECT_NEAR(solve_1d_mode(1e8, 3).x, 3.0 * pi, 1e-6);
    EXPECT_NEAR(solve_1d_mode(1e-8, 3).x, 2.5 * pi, 1e-6);
}

TEST(Solve1DMode, InvalidInput)
{
    EXPECT_THROW(solve_1d_mode(0.0, 1), std::invalid_argument);
    EXPECT_THROW(solve_1d_mode(-1.0, 1), std::invalid_argument);
    EXPECT_THROW(solve_1d_mode(1.0, 0), std::invalid_argument);
    EXPECT_THROW(spectrum_1d(1.0, 0), std::invalid_argument);
}

TEST(Spectrum1D, TwoLevelsLargeBox)
{
    const auto modes = spectrum_1d(10.0, 2);
    ASSERT_EQ(modes.size(), 2u);
    EXPECT_NEAR(modes[0].x, kLambda10First, 1e-10);
    EXPECT_NEAR(modes[1].x, kLambda10Second, 1e-10);
}

TEST(Spectrum1D, SingleLevel)
{
    const auto modes = spectrum_1d(1.0, 1);
    ASSERT_EQ(modes.size(), 1u);
    EXPECT_EQ(modes[0].x, solve_1d_mode(1.0, 1).x);
}

TEST(Spectrum1D, ParallelMatchesSerial)
{
    for (double lambda : {0.01, 1.0, 50.0}) {
        const auto par = spectrum_1d(lambda, 40);
        const auto ser = spectrum_1d_serial(lambda, 40);
        ASSERT_EQ(par.size(), ser.size());
        for (std::size_t i = 0; i < par.size(); ++i) {
            EXPECT_EQ(par[i].x, ser[i].x);
            EXPECT_EQ(par[i].epsilon, ser[i].epsilon);
        }
    }
}

TEST(Spectrum1D, BranchBracketAndOrdering)
{
    for (double lambda : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
        const auto modes = spectrum_1d(lambda, 30);
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const int n = modes[i].n;
            EXPECT_GT(modes[i].x, (n - 0.5) * pi);
            EXPECT_LT(modes[i].x, n * pi);
            if (i > 0) {
                EXPECT_GT(modes[i].epsilon, modes[i - 1].epsilon);
                EXPECT_LT(modes[i].x - modes[i - 1].x, pi);
            }
        }
    }
}

TEST(Spectrum1D, MonotoneInterpolationBetweenLimits)
{
    for (int n : {1, 2, 5}) {
        double previous = (n - 0.5) * pi;
        for (double lambda = 1e-6; lambda <= 1e6; lambda *= 10.0) {
            const double x = solve_1d_mode(lambda, n).x;
            EXPECT_GT(x, previous) << "lambda " << lambda;
            previous = x;
        }
        EXPECT_NEAR(solve_1d_mode(1e-9, n).x, (n - 0.5) * pi, 1e-6);
        EXPECT_NEAR(solve_1d_mode(1e9, n).x, n * pi, 1e-6);
    }
}

TEST(Spectrum1D, SpacingApproachesPi)
{
    const auto modes = spectrum_1d(1.0, 60);
    double previous_gap = 0.0;
    for (std::size_t i = 1; i < modes.size(); ++i) {
        const double gap = pi - (modes[i].x - modes[i - 1].x);
        EXPECT_GT(gap, 0.0);
        if (i > 1) {
            EXPECT_LT(gap, previous_gap);
        }
        previous_gap = gap;
    }
    EXPECT_LT(previous_gap, 1e-3);
}

TEST(Spectrum1D, OracleEquivalence)
{
    for (double lambda : {0.1, 1.0, 10.0}) {
        const auto modes = spectrum_1d(lambda, 10);
        for (const auto& m : modes) {
            EXPECT_NEAR(m.x, oracle::root_1d(lambda, m.n, 200'000), 1e-8) << "lambda " << lambda << " n " << m.n;
        }
    }
}

TEST(MirrorSpectrum, SignSymmetric)
{
    Mode1D single;
    single.epsilon = 2.2619;
    const auto pair = mirror_spectrum({single});
    ASSERT_EQ(pair.size(), 2u);
    EXPECT_EQ(pair[0], -2.2619);
    EXPECT_EQ(pair[1], 2.2619);

    EXPECT_TRUE(mirror_spectrum({}).empty());

    const auto signed_levels = mirror_spectrum(spectrum_1d(1.0, 3));
    ASSERT_EQ(signed_levels.size(), 6u);
    for (std::size_t i = 0; i < signed_levels.size(); ++i) {
        EXPECT_EQ(signed_levels[i], -signed_levels[signed_levels.size() - 1 - i]);
    }
}

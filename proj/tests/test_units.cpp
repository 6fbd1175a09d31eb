#include <random>

#include <gtest/gtest.h>

#include "diracbox/units.hpp"

using namespace diracbox;

TEST(Dispersion, RestEnergy) { EXPECT_EQ(dispersion(WaveVector{{0.0, 0.0, 0.0}}), 1.0); }

TEST(Dispersion, NonRelativisticExpansion)
{
    const WaveVector u{{1e-4, 0.0, 0.0}};
    EXPECT_NEAR(dispersion(u) - 1.0, 5.0e-9, 1e-12);
    EXPECT_NEAR(kinetic_energy(u), 5.0e-9, 1e-15);
}

TEST(Dispersion, PublishedGroundLevelSmallBox)
{
    // k_l L_l / pi = 0.674129 at L/L_C = 0.1 with E/(mc^2) = 36.6957.
    const double ul = 0.674129 * pi / 0.1;
    EXPECT_NEAR(dispersion(WaveVector{{ul, ul, ul}}), 36.6957, 5e-4);
}

TEST(RFactor, Endpoints)
{
    EXPECT_EQ(r_factor(0.0), 0.0);
    EXPECT_NEAR(r_factor(1e6), 1.0, 1e-5);
    EXPECT_LT(r_factor(1e6), 1.0);
}

TEST(RFactor, PublishedGroundLevelUnitBox)
{
    const double ul = 0.730735 * pi;
    const WaveVector u{{ul, ul, ul}};
    const double magnitude = std::sqrt(3.0) * ul;
    EXPECT_NEAR(r_factor(u), magnitude / (4.10004 + 1.0), 1e-5);
    EXPECT_NEAR(r_factor(u), 0.77964, 1e-4);
}

TEST(Units, Properties)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(0.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        WaveVector u{{coord(rng), coord(rng), coord(rng)}};
        const double eps = dispersion(u);
        const double mag = u.magnitude();

        // 2 (eps + 1) = (eps + 1)^2 - u^2
        const double lhs = 2.0 * (eps + 1.0);
        const double rhs = (eps + 1.0) * (eps + 1.0) - mag * mag;
        EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);

        const double r = r_factor(u);
        EXPECT_GE(r, 0.0);
        EXPECT_LT(r, 1.0);
        EXPECT_LT(r, r_factor(mag * 1.01 + 1e-9));

        WaveVector bigger = u;
        bigger.u[i % 3] += 0.1;
        EXPECT_GT(dispersion(bigger), eps);
    }
}

TEST(Units, Validation)
{
    EXPECT_THROW(BoxGeometry({1.0, 0.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(BoxGeometry({1.0, -2.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(BoxGeometry({1.0, std::numeric_limits<double>::infinity(), 1.0}), std::invalid_argument);
    EXPECT_THROW(QuantumNumbers({0, 1, 1}), std::invalid_argument);
    EXPECT_TRUE(BoxGeometry::cube(2.0).is_cubic());
    EXPECT_FALSE(BoxGeometry({1.0, 2.0, 3.0}).is_cubic());
    EXPECT_EQ(QuantumNumbers({3, 1, 2}).sorted(), QuantumNumbers({1, 2, 3}));
}

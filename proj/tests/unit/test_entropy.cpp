#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "omgci/entropy.hpp"
#include "omgci/errors.hpp"

using namespace omgci;

namespace {

// Textbook form in long double, fine away from 0 and infinity.
long double g_reference(long double x) { return (1 + x) * std::log1p(x) - x * std::log(x); }

}  // namespace

TEST(G, SpecialValues) {
    EXPECT_EQ(g(0.0), 0.0);
    EXPECT_NEAR(g(1.0), 2.0 * std::log(2.0), 1e-15);
    EXPECT_THROW(g(-1e-300), DomainError);
}

TEST(G, TinyArgumentKeepsRelativeAccuracy) {
    // 60-digit evaluation of (1+x)ln(1+x) - x ln x at x = 1e-15
    EXPECT_NEAR(g(1e-15), 3.553877639491068576e-14, 1e-12 * 3.55e-14);
}

TEST(G, AgreesWithLongDoubleReference) {
    for (double x : {1e-7, 1e-4, 0.01, 0.37, 1.0, 3.5, 100.0, 1e4}) {
        const double ref = static_cast<double>(g_reference(x));
        EXPECT_NEAR(g(x), ref, 1e-13 * std::abs(ref)) << x;
    }
}

TEST(G, ContinuousAcrossSeriesSwitch) {
    const double below = g(std::nextafter(1e-8, 0.0));
    const double above = g(1e-8);
    EXPECT_NEAR(below, above, 1e-14 * above);
}

TEST(GPrime, SpecialValues) {
    EXPECT_NEAR(g_prime(1.0), std::log(2.0), 1e-16);
    EXPECT_EQ(g_prime(0.0), INFINITY);
    EXPECT_THROW(g_prime(-0.5), DomainError);
    // log1p(1e-9) at 60 digits
    EXPECT_NEAR(g_prime(1e9), 9.9999999950000000033e-10, 1e-24);
}

TEST(GPrime, MatchesCentralDifference) {
    const double x = 0.37;
    const double step = 1e-6;
    const double fd = (g(x + step) - g(x - step)) / (2.0 * step);
    EXPECT_NEAR(g_prime(x), fd, 1e-6 * g_prime(x));
}

TEST(LogMeanBounds, ExactValues) {
    const auto one = log_mean_bounds(1.0);
    EXPECT_DOUBLE_EQ(one.lower_tight, 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(one.lower_loose, 0.5);
    EXPECT_GT(std::log(2.0), one.lower_tight);

    const auto tenth = log_mean_bounds(0.1);
    EXPECT_NEAR(tenth.lower_tight, 5.0 / 3.0, 1e-15);
    EXPECT_NEAR(tenth.lower_loose, 10.0 / 11.0, 1e-15);
    EXPECT_GT(std::log(11.0), tenth.lower_tight);
}

TEST(LogMeanBounds, StrictChainOnRandomPoints) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(std::log(1e-6), std::log(1e6));
    for (int i = 0; i < 100000; ++i) {
        const double x = std::exp(u(rng));
        const auto b = log_mean_bounds(x);
        ASSERT_GT(g_prime(x), b.lower_tight) << x;
        ASSERT_GT(b.lower_tight, b.lower_loose) << x;
    }
}

TEST(G, IncreasingAndConcave) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(std::log(1e-6), std::log(1e4));
    for (int i = 0; i < 20000; ++i) {
        double a = std::exp(u(rng));
        double b = std::exp(u(rng));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        ASSERT_LT(g(a), g(b));
        const double mid = g(0.5 * (a + b));
        const double chord = 0.5 * (g(a) + g(b));
        ASSERT_GE(mid, chord - 4e-16 * std::abs(chord));
    }
}

TEST(GPrime, XTimesGPrimeIsIncreasing) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(std::log(1e-6), std::log(1e4));
    for (int i = 0; i < 20000; ++i) {
        double x = std::exp(u(rng));
        double y = std::exp(u(rng));
        if (x > y) std::swap(x, y);
        ASSERT_GE(y * g_prime(y), x * g_prime(x) * (1.0 - 4e-16));
    }
}

TEST(ToBase, IsOneMultiplication) {
    EXPECT_EQ(to_base(1.25, LogBase::Natural), 1.25);
    EXPECT_DOUBLE_EQ(to_base(std::log(2.0), LogBase::Two), 1.0);
    EXPECT_DOUBLE_EQ(to_base(2.0, LogBase::Two), 2.0 / std::log(2.0));
}

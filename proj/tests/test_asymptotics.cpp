#include "mlkit/asymptotics.hpp"
#include "mlkit/representation.hpp"

#include <gtest/gtest.h>

#include <cmath>

using mlkit::Complex;
using mlkit::MLParams;

TEST(Watson, Coefficients)
{
    const MLParams p{0.5, 1.0, 2.0};
    EXPECT_NEAR(mlkit::watson_coeff_a(1, p).real(), -1.0 / (mlkit::pi * 2.0), 1e-16);
    EXPECT_NEAR(mlkit::watson_coeff_a(2, p).real(), 0.0, 1e-16);
    EXPECT_NEAR(mlkit::watson_coeff_b(1, p).real(), 1.0 / (mlkit::pi * 4.0), 1e-16);
}

TEST(Watson, TailTracksIntegralPart)
{
    for (double lam : {-1.0, 1.0}) {
        const MLParams p{0.7, 1.0, lam};
        const double t = 200.0;
        const Complex truth = mlkit::eval_repr(t, p, 1e-13).integral;
        const Complex tail = mlkit::expand_tail(t, p, 3);
        EXPECT_LT(std::abs(truth - tail), 5.0 * std::pow(t, -4.0 * p.alpha));
    }
}

TEST(Watson, AlphaAlphaUsesB)
{
    const MLParams p{0.6, 0.6, -2.0};
    const double t = 100.0;
    EXPECT_LT(std::abs(mlkit::eval_repr(t, p, 1e-13).integral - mlkit::expand_tail(t, p, 4)), 1e-6);
    EXPECT_THROW(mlkit::expand_tail(t, {0.6, 1.2, -2.0}, 3), mlkit::domain_error);
}

TEST(Asymptotic, OptimalTruncationMatchesRepr)
{
    const MLParams p{0.7, 1.0, -1.0};
    const auto a = mlkit::eval_asymptotic(50.0, p);
    const auto r = mlkit::eval_repr(50.0, p, 1e-13);
    EXPECT_EQ(a.method, mlkit::Method::Asymptotic);
    EXPECT_LT(std::abs(a.value - r.value), std::max(a.error_estimate * 10.0, 1e-12));
}

TEST(Bounds, FiniteAndAboveFloor)
{
    const auto b = mlkit::estimate_bound(0.5, 1.0, mlkit::BoundKind::Eq24);
    EXPECT_TRUE(std::isfinite(b.constant));
    EXPECT_GE(b.constant, std::abs(mlkit::watson_coeff_a(1, {0.5, 1.0, 1.0})) * std::tgamma(0.5) * (1 - 1e-12));
    EXPECT_LT(std::fabs(b.extended_constant - b.constant), 0.01 * b.constant);
    EXPECT_GT(b.grid_size, 50u);
}

TEST(Bounds, AlphaAlphaWeight)
{
    const auto b = mlkit::estimate_bound(0.7, -1.0, mlkit::BoundKind::Eq25);
    EXPECT_TRUE(std::isfinite(b.constant));
    EXPECT_GE(b.constant, b.asymptotic_floor);
    EXPECT_STREQ(mlkit::to_string(mlkit::BoundKind::Eq25), "25");
}

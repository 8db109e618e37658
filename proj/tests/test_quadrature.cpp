#include "mlkit/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>

using mlkit::DecayHint;

TEST(Quadrature, ExponentialTail)
{
    auto f = [](double x) { return std::exp(-2.0 * x); };
    const auto q = mlkit::integrate_semi_infinite(f, DecayHint::exponential(2.0), 1e-13);
    EXPECT_NEAR(q.value, 0.5, 1e-13);
    EXPECT_GT(q.truncation_point, 0.0);
}

TEST(Quadrature, AlgebraicTailIsMapped)
{
    auto f = [](double x) { return 1.0 / (1.0 + x * x); };
    const auto q = mlkit::integrate_semi_infinite(f, DecayHint::algebraic(-2.0), 1e-13);
    EXPECT_NEAR(q.value, mlkit::pi / 2.0, 1e-12);
    EXPECT_EQ(q.truncation_point, 0.0);
}

TEST(Quadrature, OriginSingularity)
{
    // int_0^inf x^{-1/2} e^{-x} dx = sqrt(pi)
    auto f = [](double x) { return std::exp(-x) / std::sqrt(x); };
    const auto q = mlkit::integrate_semi_infinite(f, DecayHint::exponential(1.0, -0.5, -0.5), 1e-13);
    EXPECT_NEAR(q.value, std::sqrt(mlkit::pi), 1e-12);
}

TEST(Quadrature, ComplexIntegrand)
{
    auto f = [](double x) { return std::exp(mlkit::Complex{-1.0, 1.0} * x); };
    const auto q = mlkit::integrate_semi_infinite(f, DecayHint::exponential(1.0), 1e-13);
    EXPECT_LT(std::abs(q.value - mlkit::Complex{0.5, 0.5}), 1e-12);
}

TEST(Quadrature, FromOriginAndInterval)
{
    auto f = [](double x) { return std::pow(x, -0.7); };
    EXPECT_NEAR(mlkit::integrate_from_origin(f, 1.0, -0.7, 1e-12).value, 1.0 / 0.3, 1e-10);
    auto g = [](double x) { return std::sin(x); };
    EXPECT_NEAR(mlkit::integrate_interval(g, 0.0, mlkit::pi, 1e-13).value, 2.0, 1e-13);
}

TEST(Quadrature, RejectsNonIntegrableTail)
{
    auto f = [](double x) { return 1.0 / (1.0 + x); };
    EXPECT_THROW(mlkit::integrate_semi_infinite(f, DecayHint::algebraic(-1.0)), mlkit::domain_error);
}

TEST(Quadrature, BudgetExhaustionCarriesPartial)
{
    auto f = [](double x) { return std::sin(1.0 / x); };
    try {
        mlkit::integrate_interval(f, 1e-6, 1.0, 1e-15, 200);
        FAIL();
    } catch (const mlkit::quadrature_failure& e) {
        EXPECT_GT(e.evaluations(), 0u);
        EXPECT_GT(e.error_estimate(), 0.0);
    }
}

TEST(Quadrature, SplitPoint)
{
    EXPECT_DOUBLE_EQ(mlkit::split_point({0.5, 1.0, 3.0}), 9.0);
    EXPECT_DOUBLE_EQ(mlkit::split_point({0.5, 1.0, 0.2}), 1.0);
}

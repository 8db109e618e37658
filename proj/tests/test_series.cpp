#include "mlkit/series.hpp"

#include <gtest/gtest.h>

#include <cmath>

using mlkit::Complex;

TEST(Series, AtZeroIsReciprocalGamma)
{
    for (double b : {0.3, 1.0, 1.2})
        EXPECT_NEAR(mlkit::ml_series(0.0, 0.6, b).value.real(), 1.0 / std::tgamma(b), 1e-15);
}

TEST(Series, HalfOrderIsScaledErfc)
{
    for (double x : {-3.0, -1.0, -0.2, 0.5, 2.0}) {
        const double exact = std::exp(x * x) * std::erfc(-x);
        const auto s = mlkit::ml_series(x, 0.5, 1.0);
        EXPECT_LE(std::fabs(s.value.real() - exact), s.rounding_bound + s.truncation_bound + 1e-15 * exact)
            << "x = " << x;
        EXPECT_EQ(s.value.imag(), 0.0);
    }
}

TEST(Series, RecurrenceAcrossBeta)
{
    // E_{a,b}(z) = 1/Gamma(b) + z E_{a,a+b}(z)
    const double a = 0.7;
    const Complex z{0.8, -1.1};
    for (double b : {0.2, 0.5, 0.9}) {
        const Complex lhs = mlkit::ml_series(z, a, b).value;
        const Complex rhs = 1.0 / std::tgamma(b) + z * mlkit::ml_series(z, a, a + b).value;
        EXPECT_LT(std::abs(lhs - rhs), 1e-13);
    }
}

TEST(Series, ReportsBounds)
{
    const auto s = mlkit::ml_series(-5.0, 0.5, 1.0);
    EXPECT_GT(s.terms_used, 10u);
    EXPECT_GE(s.magnitude_sum, std::abs(s.value));
    EXPECT_GT(s.rounding_bound, 0.0);
}

TEST(Series, RefusesLargeArguments)
{
    EXPECT_THROW(mlkit::ml_series(Complex{40.0, 0.0}, 0.5, 1.0), mlkit::accuracy_regime_error);
}

TEST(ScaledSeries, LimitAtTZero)
{
    EXPECT_EQ(mlkit::scaled_series(0.0, {0.5, 1.0, -1.0}).value, Complex(1.0));
    EXPECT_EQ(mlkit::scaled_series(0.0, {0.5, 1.2, -1.0}).value, Complex(0.0));
    EXPECT_THROW(mlkit::scaled_series(0.0, {0.5, 0.5, -1.0}), mlkit::singular_limit_error);
    EXPECT_THROW(mlkit::scaled_series(-1.0, {0.5, 1.0, -1.0}), mlkit::domain_error);
}

#ifdef MLKIT_HAVE_QUADMATH
TEST(ScaledSeries, DoubleStaysWithinItsRoundingBound)
{
    const mlkit::MLParams p{0.3, 1.15, Complex{2.0, 0.5}};
    for (double t : {0.1, 1.0, 3.0}) {
        const auto d = mlkit::scaled_series<double>(t, p);
        const Complex q = mlkit::scaled_series<__float128>(t, p).value;
        EXPECT_LE(std::abs(d.value - q), d.rounding_bound + d.truncation_bound) << "t = " << t;
        EXPECT_LT(std::abs(d.value - q), 1e-10 * std::abs(q));
    }
}

TEST(ScaledSeries, QuadResolvesCancellation)
{
    // E_{1/2}(-5) = e^{25} erfc(5), a value of order 0.1 from terms of order 1e9
    const auto q = mlkit::scaled_series<__float128>(25.0, {0.5, 1.0, -1.0});
    const double exact = std::exp(25.0) * std::erfc(5.0);
    EXPECT_NEAR(q.value.real() / exact, 1.0, 1e-12);
}
#endif

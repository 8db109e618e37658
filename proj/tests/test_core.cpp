#include "mlkit/core.hpp"

#include <gtest/gtest.h>

#include <cmath>

using mlkit::Complex;
using mlkit::MLParams;
using mlkit::Region;

TEST(Gamma, MatchesStdTgamma)
{
    for (double x : {0.1, 0.3, 0.5, 1.0, 1.5, 2.7, 5.0, 10.5, 30.0, 120.0})
        EXPECT_NEAR(mlkit::real_gamma(x) / std::tgamma(x), 1.0, 1e-13) << "x = " << x;
}

TEST(Gamma, RejectsNonPositiveArguments)
{
    EXPECT_THROW(mlkit::real_gamma(0.0), mlkit::domain_error);
    EXPECT_THROW(mlkit::real_gamma(-0.5), mlkit::domain_error);
}

TEST(Gamma, LogGammaMatchesLgamma)
{
    for (double x : {0.2, 1.0, 3.3, 50.0, 1e4})
        EXPECT_NEAR(mlkit::log_gamma(x), std::lgamma(x), 1e-12 * std::max(1.0, std::fabs(std::lgamma(x))));
}

TEST(Gamma, HalfIsSqrtPi) { EXPECT_NEAR(mlkit::real_gamma(0.5), std::sqrt(mlkit::pi), 1e-15); }

TEST(Trig, SinPiExactAtIntegers)
{
    for (int k = -5; k <= 5; ++k)
        EXPECT_EQ(mlkit::sin_pi(static_cast<double>(k)), 0.0);
    EXPECT_DOUBLE_EQ(mlkit::sin_pi(0.5), 1.0);
    EXPECT_DOUBLE_EQ(mlkit::cos_pi(1.0), -1.0);
    EXPECT_NEAR(mlkit::sin_pi(0.3), std::sin(0.3 * mlkit::pi), 1e-16);
}

TEST(PrincipalPower, NegativeRealUsesUpperBranch)
{
    const Complex z = mlkit::principal_power(Complex{-4.0, 0.0}, 0.5);
    EXPECT_NEAR(z.real(), 0.0, 1e-15);
    EXPECT_NEAR(z.imag(), 2.0, 1e-15);
    EXPECT_NEAR(mlkit::principal_arg(Complex{-1.0, 0.0}), mlkit::pi, 0.0);
    EXPECT_NEAR(mlkit::principal_arg(Complex{-1.0, -0.0}), mlkit::pi, 0.0);
}

TEST(Validate, RejectsOutOfRangeParameters)
{
    EXPECT_THROW(mlkit::validate({0.0, 1.0, 1.0}), mlkit::domain_error);
    EXPECT_THROW(mlkit::validate({1.0, 1.0, 1.0}), mlkit::domain_error);
    EXPECT_THROW(mlkit::validate({0.5, 1.5, 1.0}), mlkit::domain_error);
    EXPECT_THROW(mlkit::validate({0.5, 0.0, 1.0}), mlkit::domain_error);
    EXPECT_THROW(mlkit::validate({0.5, 1.0, Complex{NAN, 0.0}}), mlkit::domain_error);
    EXPECT_NO_THROW(mlkit::validate({0.5, 1.49, 1.0}));
}

TEST(Validate, MessageNamesTheBound)
{
    try {
        mlkit::validate({0.5, 2.0, 1.0});
        FAIL();
    } catch (const mlkit::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("beta"), std::string::npos);
    }
}

TEST(Region, Classification)
{
    EXPECT_EQ(mlkit::classify_region({0.5, 1.0, 1.0}), Region::ResiduePresent);
    EXPECT_EQ(mlkit::classify_region({0.5, 1.0, -1.0}), Region::ResidueAbsentNegativeReal);
    EXPECT_EQ(mlkit::classify_region({0.5, 1.0, std::polar(1.0, 0.8 * mlkit::pi)}),
              Region::ResidueAbsentExtended);
    EXPECT_EQ(mlkit::classify_region({0.5, 1.0, std::polar(1.0, 0.4 * mlkit::pi)}), Region::ResiduePresent);
    EXPECT_EQ(mlkit::classify_region({0.5, 1.0, 0.0}), Region::OutOfScope);
}

TEST(Region, PoleMarginSign)
{
    EXPECT_GT(mlkit::pole_margin({0.5, 1.0, 1.0}), 0.0);
    EXPECT_LT(mlkit::pole_margin({0.5, 1.0, -1.0}), 0.0);
    EXPECT_NEAR(mlkit::pole_margin({0.5, 1.0, Complex{0.0, 1.0}}), 0.0, 1e-15);
}

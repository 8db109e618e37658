#include "mlkit/evaluate.hpp"

#include <gtest/gtest.h>

#include <cmath>

using mlkit::Complex;
using mlkit::MLParams;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

TEST(Representation, AgreesWithSeriesAcrossRegions)
{
    const double a = 0.6;
    for (Complex lam : {Complex{1.0}, Complex{-2.0}, std::polar(1.5, 0.3 * mlkit::pi),
                        std::polar(0.7, 0.85 * mlkit::pi), std::polar(0.7, -0.85 * mlkit::pi)})
        for (double b : {0.3, a, 1.0, 1.4})
            for (double t : {0.05, 1.0, 3.0}) {
                const MLParams p{a, b, lam};
                const auto r = mlkit::eval_repr(t, p, 1e-12);
                const auto s = mlkit::scaled_series(t, p);
                EXPECT_LT(rel(r.value, s.value), 1e-9) << "beta " << b << " lambda " << lam << " t " << t;
                EXPECT_EQ(r.region, mlkit::classify_region(p));
            }
}

TEST(Representation, ResidueAndIntegralSplit)
{
    const MLParams p{0.5, 1.0, 1.0};
    const auto r = mlkit::eval_repr(2.0, p, 1e-12);
    EXPECT_LT(std::abs(r.residue + r.integral - r.value), 1e-14 * std::abs(r.value));
    EXPECT_LT(std::abs(r.residue - mlkit::residue_term(2.0, p)), 1e-14 * std::abs(r.residue));
    EXPECT_EQ(r.method, mlkit::Method::IntegralRepr);
}

TEST(Representation, SpecialisedFormsMatchGeneral)
{
    const MLParams one{0.7, 1.0, Complex{0.5, 0.8}};
    const MLParams same{0.7, 0.7, Complex{0.5, 0.8}};
    for (double t : {0.1, 2.0, 15.0}) {
        EXPECT_LT(rel(mlkit::eval_E_alpha(t, one, 1e-12).value, mlkit::eval_repr(t, one, 1e-12).value), 1e-10);
        EXPECT_LT(rel(mlkit::eval_E_alpha_alpha(t, same, 1e-12).value, mlkit::eval_repr(t, same, 1e-12).value),
                  1e-10);
    }
    EXPECT_THROW(mlkit::eval_E_alpha(1.0, same), mlkit::domain_error);
    EXPECT_THROW(mlkit::eval_E_alpha_alpha(1.0, one), mlkit::domain_error);
    EXPECT_THROW(mlkit::eval_E_alpha_alpha(0.0, same), mlkit::divergence_error);
}

TEST(Representation, TZeroLimit)
{
    EXPECT_LT(std::abs(mlkit::eval_at_zero({0.5, 1.0, 1.0}, 1e-12).value - 1.0), 1e-10);
    EXPECT_LT(std::abs(mlkit::eval_at_zero({0.5, 1.0, -3.0}, 1e-12).value - 1.0), 1e-10);
    EXPECT_LT(std::abs(mlkit::eval_at_zero({0.5, 1.3, 2.0}, 1e-12).value), 1e-10);
    EXPECT_THROW(mlkit::eval_at_zero({0.5, 0.5, 1.0}), mlkit::divergence_error);
    EXPECT_THROW(mlkit::eval_at_zero({0.5, 0.8, 1.0}), mlkit::singular_limit_error);
}

TEST(Representation, Refusals)
{
    EXPECT_THROW(mlkit::eval_repr(1.0, {0.5, 1.0, 0.0}), mlkit::domain_error);
    EXPECT_THROW(mlkit::eval_repr(1.0, {0.5, 1.0, std::polar(1.0, 0.5 * mlkit::pi - 1e-4)}),
                 mlkit::near_pole_error);
    EXPECT_THROW(mlkit::eval_repr(-1.0, {0.5, 1.0, 1.0}), mlkit::domain_error);
}

TEST(Evaluate, AutoPicksSeriesForSmallArguments)
{
    const MLParams p{0.5, 1.0, -1.0};
    EXPECT_EQ(mlkit::evaluate(1.0, p).method, mlkit::Method::Series);
    EXPECT_EQ(mlkit::evaluate(2000.0, p).method, mlkit::Method::IntegralRepr);
}

TEST(Evaluate, LambdaZeroIsPowerOverGamma)
{
    const MLParams p{0.5, 1.2, 0.0};
    EXPECT_NEAR(mlkit::evaluate(4.0, p).value.real(), std::pow(4.0, 0.2) / std::tgamma(1.2), 1e-14);
}

TEST(Evaluate, ParseMode)
{
    EXPECT_EQ(mlkit::parse_mode("repr"), mlkit::Mode::Repr);
    EXPECT_EQ(mlkit::parse_mode("asympt"), mlkit::Mode::Asympt);
    EXPECT_THROW(mlkit::parse_mode("bogus"), std::invalid_argument);
}

TEST(Laplace, TransformOfRepresentation)
{
    const MLParams p{0.6, 1.2, Complex{0.8, 0.3}};
    const double s = 2.5 * std::pow(std::abs(p.lambda), 1.0 / p.alpha);
    const double horizon = mlkit::laplace_horizon(s, p, 1e-10);
    EXPECT_LT(mlkit::laplace_identity_gap(s, p, horizon, 1e-10), 1e-8);
}

TEST(J, HalfOrderAtZeroIsPi)
{
    const auto j = mlkit::eval_J(0.0, {0.5, 1.0, 1.0}, 1e-12);
    EXPECT_NEAR(j.value.real(), mlkit::pi, 1e-9);
    EXPECT_THROW(mlkit::eval_J(0.0, {0.5, 1.0, -1.0}), mlkit::domain_error);
}

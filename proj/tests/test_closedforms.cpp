#include "mlkit/closedforms.hpp"

#include <gtest/gtest.h>

#include <cmath>

using mlkit::Complex;
using mlkit::MLParams;
using mlkit::MomentRoute;

TEST(Moments, ContourMatchesQuadrature)
{
    for (const MLParams& p : {MLParams{0.4, 1.2, 1.0}, MLParams{0.7, 1.5, Complex{0.6, 0.9}},
                              MLParams{0.9, 1.1, 3.0}}) {
        const Complex m1 = mlkit::m1_closed(p);
        const Complex m2 = mlkit::m2_closed(p);
        EXPECT_LT(std::abs(m1 - mlkit::m1_quadrature(p, 1e-12).value), 1e-9 * std::abs(m1));
        EXPECT_LT(std::abs(m2 - mlkit::m2_quadrature(p, 1e-12).value), 1e-9 * std::abs(m2));
    }
}

TEST(Moments, MellinRouteAgrees)
{
    const MLParams p{0.75, 1.3, Complex{1.5, 0.4}};
    EXPECT_LT(std::abs(mlkit::m1_closed(p, MomentRoute::Mellin) - mlkit::m1_closed(p)), 1e-13);
    EXPECT_LT(std::abs(mlkit::m2_closed(p, MomentRoute::Mellin) - mlkit::m2_closed(p)), 1e-13);
    const MLParams q{0.75, 1.0, 2.0};
    EXPECT_LT(std::abs(mlkit::m2_closed(q, MomentRoute::Mellin) - mlkit::m2_closed(q)), 1e-13);
}

TEST(Moments, BetaOneSecondMoment)
{
    const MLParams p{0.5, 1.0, 2.0};
    // pi (1-a) / (a lambda sin(pi a)) = pi / 2
    EXPECT_NEAR(mlkit::m2_closed(p).real(), mlkit::pi / 2.0, 1e-14);
}

TEST(Moments, DomainChecks)
{
    EXPECT_THROW(mlkit::m1_closed({0.5, 1.0, 1.0}), mlkit::domain_error);
    EXPECT_THROW(mlkit::m1_closed({0.5, 1.2, -1.0}), mlkit::domain_error);
    EXPECT_THROW(mlkit::m2_closed({0.5, 0.8, 1.0}), mlkit::domain_error);
}

TEST(MellinF, RemovablePointAndPoles)
{
    const MLParams p{0.6, 1.0, 1.7};
    const Complex near = mlkit::mellin_F(1e-7, p);
    EXPECT_LT(std::abs(mlkit::mellin_F(0.0, p) - near), 1e-6);
    EXPECT_THROW(mlkit::mellin_F(0.6, p), mlkit::pole_error);
    EXPECT_THROW(mlkit::mellin_F(1.2, p), mlkit::pole_error);
}

TEST(Collapse, DensityIntegralValues)
{
    const MLParams one{0.6, 1.0, Complex{1.0, 0.5}};
    EXPECT_LT(std::abs(mlkit::theorem34_value(one) - (1.0 - 1.0 / 0.6)), 1e-13);
    const MLParams up{0.6, 1.3, Complex{1.0, 0.5}};
    EXPECT_LT(std::abs(mlkit::theorem34_value(up) - mlkit::theorem34_expected(up)), 1e-13);
    EXPECT_THROW(mlkit::theorem34_value({0.6, 0.6, 1.0}), mlkit::divergence_error);
}

TEST(TrigIdentity, SmallAlphaStaysExact)
{
    for (double a : {0.0015, 0.01, 0.3, 0.99})
        for (double b : {0.1, 0.5, 1.0, 1.0 + 0.5 * a})
            EXPECT_LT(mlkit::trig_identity_defect(a, b), 1e-13) << a << " " << b;
    EXPECT_THROW(mlkit::trig_identity_defect(0.5, 1.6), mlkit::domain_error);
}

TEST(MellinSine, MatchesGammaSine)
{
    for (double s : {0.3, 1.0, 2.5})
        for (double phi : {-1.0, 0.4, 1.2})
            EXPECT_LT(mlkit::mellin_sine_defect(s, phi), 1e-9) << s << " " << phi;
    EXPECT_THROW(mlkit::mellin_sine_integral(1.0, 2.0), mlkit::domain_error);
}

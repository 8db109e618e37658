#pragma once

// Closed forms for the two moments of the density denominator
//
//   M1 = int_0^inf v^{2a-b} / D(v) dv,   M2 = int_0^inf v^{a-b} / D(v) dv,
//
// by the contour evaluation and by the Mellin function F(s), the collapse of
// int_0^inf f_{a,b} to -lambda^{(1-b)/a}/a, and the two trigonometric/Mellin
// identities they rest on.

#include "mlkit/core.hpp"
#include "mlkit/kernel.hpp"
#include "mlkit/quadrature.hpp"

#include <cmath>

namespace mlkit {

enum class MomentRoute { Contour, Mellin };

inline const char* to_string(MomentRoute r) { return r == MomentRoute::Contour ? "contour" : "mellin"; }

struct MomentPair {
    Complex m1; // zero (unused) for beta = 1
    Complex m2;
    MomentRoute route = MomentRoute::Contour;
};

namespace detail {

inline void require_wedge(const MLParams& p, const char* what)
{
    const Region r = classify_region(p);
    if (r != Region::ResiduePresent)
        throw domain_error(concat(what, " requires |arg lambda| < pi alpha; region is ", to_string(r)));
}

inline bool beta_in_upper_band(const MLParams& p) { return p.beta > 1.0 && p.beta < 1.0 + p.alpha; }

} // namespace detail

/// F(s) = pi lambda^{s/a-1} sin(pi (1-a) s / a) / (a sin(s pi / a)); the
/// removable point s = 0 returns its limit pi (1-a) / (a lambda).
inline Complex mellin_F(double s, const MLParams& p)
{
    validate(p);
    if (p.lambda == Complex{})
        throw domain_error("mellin_F requires lambda != 0");
    const double ratio = s / p.alpha;
    if (s == 0.0)
        return pi * (1.0 - p.alpha) / (p.alpha * p.lambda);
    const double den = sin_pi(ratio);
    if (std::fabs(den) < 1e-14)
        throw pole_error(detail::concat("mellin_F has a pole at s = ", s, " (s/alpha = ", ratio,
                                        " is an integer)"));
    return pi * principal_power(p.lambda, ratio - 1.0) * sin_pi((1.0 - p.alpha) * ratio) /
           (p.alpha * den);
}

inline Complex m1_closed(const MLParams& p, MomentRoute route = MomentRoute::Contour)
{
    detail::require_wedge(p, "m1_closed");
    if (!detail::beta_in_upper_band(p))
        throw domain_error(detail::concat("m1_closed requires beta in (1, 1+alpha) = (1, ",
                                          1.0 + p.alpha, "), got ", p.beta));
    const double a = p.alpha;
    const double b = p.beta;
    if (route == MomentRoute::Mellin)
        return mellin_F(a - b + 1.0, p) / sin_pi(a);
    const double shift = (1.0 - b) / a;
    return pi * principal_power(p.lambda, shift) * sin_pi(b - a + shift) /
           (a * sin_pi(a) * sin_pi((b - 1.0) / a));
}

inline Complex m2_closed(const MLParams& p, MomentRoute route = MomentRoute::Contour)
{
    detail::require_wedge(p, "m2_closed");
    const double a = p.alpha;
    const double b = p.beta;
    if (b != 1.0 && !detail::beta_in_upper_band(p))
        throw domain_error(detail::concat("m2_closed requires beta = 1 or beta in (1, 1+alpha) = (1, ",
                                          1.0 + a, "), got ", b));
    if (route == MomentRoute::Mellin)
        return mellin_F(1.0 - b, p) / sin_pi(a);
    if (b == 1.0)
        return pi * (1.0 - a) / (a * p.lambda * sin_pi(a));
    const double shift = (1.0 - b) / a;
    return pi * principal_power(p.lambda, shift - 1.0) * sin_pi(b + shift) /
           (a * sin_pi(a) * sin_pi((b - 1.0) / a));
}

inline MomentPair moment_pair(const MLParams& p, MomentRoute route = MomentRoute::Contour)
{
    MomentPair out;
    out.route = route;
    if (p.beta != 1.0)
        out.m1 = m1_closed(p, route);
    out.m2 = m2_closed(p, route);
    return out;
}

/// Brute-force quadrature of M1 and M2, the oracle for both closed forms.
inline QuadOutcome<Complex> m1_quadrature(const MLParams& p, double tol = default_quad_tol)
{
    detail::require_wedge(p, "m1_quadrature");
    if (!detail::beta_in_upper_band(p))
        throw domain_error(detail::concat("M1 converges only for beta in (1, 1+alpha), got ", p.beta));
    const Denominator d(p);
    const double power = 2.0 * p.alpha - p.beta;
    auto g = [&](double v) { return std::pow(v, power) / d(v); };
    return integrate_semi_infinite(g, DecayHint::algebraic(-p.beta, power, split_point(p)), tol);
}

inline QuadOutcome<Complex> m2_quadrature(const MLParams& p, double tol = default_quad_tol)
{
    detail::require_wedge(p, "m2_quadrature");
    const double power = p.alpha - p.beta;
    if (!(power > -1.0))
        throw domain_error(detail::concat("M2 diverges at the origin for beta >= 1+alpha, got ", p.beta));
    const Denominator d(p);
    auto g = [&](double v) { return std::pow(v, power) / d(v); };
    return integrate_semi_infinite(g, DecayHint::algebraic(-p.alpha - p.beta, power, split_point(p)),
                                   tol);
}

/// int_0^inf f_{a,b}(v) dv assembled from the moment closed forms:
/// (sin(b pi)/pi) M1 + (lambda sin((a-b) pi)/pi) M2. For beta = 1 this is
/// 1 - 1/a, for beta in (1, 1+a) it is -lambda^{(1-b)/a}/a.
inline Complex theorem34_value(const MLParams& p, MomentRoute route = MomentRoute::Contour)
{
    validate(p);
    if (p.beta == p.alpha)
        throw divergence_error(
            "int_0^inf f_{alpha,alpha}(v) dv does not exist (the density decays like v^-alpha)");
    if (p.beta != 1.0 && !detail::beta_in_upper_band(p))
        throw domain_error(detail::concat("the density integral needs beta = 1 or beta in (1, 1+alpha) = (1, ",
                                          1.0 + p.alpha, "), got ", p.beta));
    const MomentPair m = moment_pair(p, route);
    return sin_pi(p.beta) / pi * m.m1 + p.lambda * sin_pi(p.alpha - p.beta) / pi * m.m2;
}

/// The value theorem34_value collapses to.
inline Complex theorem34_expected(const MLParams& p)
{
    validate(p);
    if (p.beta == 1.0)
        return 1.0 - 1.0 / p.alpha;
    return -principal_power(p.lambda, (1.0 - p.beta) / p.alpha) / p.alpha;
}

/// sin(pi(b-a+(1-b)/a)) sin(b pi) - sin(pi(b-a)) sin(pi(b+(1-b)/a))
///   - sin(pi(1-b)/a) sin(pi a), in absolute terms.
inline double trig_identity_defect(double alpha, double beta)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw domain_error(detail::concat("alpha must lie in (0,1), got ", alpha));
    if (!(beta > 0.0 && beta < 1.0 + alpha))
        throw domain_error(detail::concat("beta must lie in (0, 1+alpha), got ", beta));
    // every sine has period 2 in its argument; reducing the large shift
    // (1-b)/a exactly keeps the sums below from rounding at its scale
    const double shift = std::fmod((1.0 - beta) / alpha, 2.0);
    const double lhs = sin_pi(beta - alpha + shift) * sin_pi(beta) -
                       sin_pi(beta - alpha) * sin_pi(beta + shift);
    const double rhs = sin_pi(shift) * sin_pi(alpha);
    return std::fabs(lhs - rhs);
}

/// int_0^inf x^{s-1} e^{-x cos phi} sin(x sin phi) dx by quadrature; equals
/// Gamma(s) sin(phi s).
inline QuadOutcome<double> mellin_sine_integral(double s, double phi, double tol = 1e-12)
{
    if (!(s > 0.0))
        throw domain_error(detail::concat("s must be positive, got ", s));
    if (!(std::fabs(phi) < pi / 2.0))
        throw domain_error(detail::concat("|phi| must be below pi/2, got ", phi));
    if (phi == 0.0)
        return {0.0, 0.0, 1, 0.0};
    const double c = std::cos(phi);
    const double sn = std::sin(phi);
    auto g = [&](double x) { return std::pow(x, s - 1.0) * std::exp(-x * c) * std::sin(x * sn); };
    return integrate_semi_infinite(g, DecayHint::exponential(c, s, s - 1.0), tol);
}

inline double mellin_sine_defect(double s, double phi, double tol = 1e-12)
{
    const auto q = mellin_sine_integral(s, phi, tol);
    return std::fabs(q.value - real_gamma(s) * std::sin(phi * s));
}

} // namespace mlkit

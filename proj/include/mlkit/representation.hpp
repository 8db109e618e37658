#pragma once

// t^{b-1} E_{a,b}(lambda t^a) as residue plus a Laplace integral of the
// spectral density:
//
//   t^{b-1} E_{a,b}(lambda t^a) = Res(t) + int_0^inf e^{-vt} f_{a,b}(v) dv,
//
// valid for a in (0,1), b in (0, 1+a). For b >= 1 the identity extends to
// t = 0, where the integral is finite and the two parts sum to the limit of
// the left side.

#include "mlkit/core.hpp"
#include "mlkit/kernel.hpp"
#include "mlkit/quadrature.hpp"
#include "mlkit/series.hpp"

#include <cmath>
#include <limits>

namespace mlkit {

enum class Method { Series, IntegralRepr, Asymptotic };

inline const char* to_string(Method m)
{
    switch (m) {
    case Method::Series: return "series";
    case Method::IntegralRepr: return "repr";
    case Method::Asymptotic: return "asympt";
    }
    return "?";
}

struct EvalOutcome {
    Complex value;
    Method method = Method::IntegralRepr;
    Region region = Region::ResiduePresent;
    double error_estimate = 0.0;
    Complex residue;  // pole contribution (zero off the wedge)
    Complex integral; // value - residue
};

namespace detail {

inline void require_representable(const MLParams& p, Region region)
{
    if (region == Region::OutOfScope)
        throw domain_error("lambda must be nonzero for the integral representation");
    const double margin = std::fabs(pole_margin(p));
    if (margin < min_pole_margin)
        throw near_pole_error(concat("|arg lambda| is within ", margin,
                                     " rad of pi*alpha; the denominator roots sit on the path"));
}

inline DecayHint density_hint(const MLParams& p, double t)
{
    const KernelDiagnostics d = diagnostics(p);
    const double split = split_point(p);
    if (t > 0.0)
        return DecayHint::exponential(t, d.origin_exponent, d.tail_exponent, split);
    return DecayHint::algebraic(d.tail_exponent, d.origin_exponent, split);
}

inline double rounding_of(Complex z) { return 4.0 * std::numeric_limits<double>::epsilon() * std::abs(z); }

/// int_0^inf e^{-ut} u^{power} / D(u) du; power = a - 1 gives J_lambda(t).
inline QuadOutcome<Complex> weighted_inverse_denominator(double t, const MLParams& p,
                                                         double power, double tail_power,
                                                         double tol)
{
    const Denominator denom(p);
    const double alpha = p.alpha;
    auto integrand = [&](double u) -> Complex {
        const double w = std::pow(u, alpha);
        const Complex base = std::pow(u, power) / denom.at_power(w);
        return t > 0.0 ? base * std::exp(-u * t) : base;
    };
    const double split = split_point(p);
    const DecayHint hint = t > 0.0 ? DecayHint::exponential(t, power, tail_power, split)
                                   : DecayHint::algebraic(tail_power, power, split);
    return integrate_semi_infinite(integrand, hint, tol);
}

} // namespace detail

/// Residue plus density integral for t > 0.
inline EvalOutcome eval_repr(double t, const MLParams& p, double tol = default_quad_tol)
{
    const Region region = classify_region(p);
    if (!(t > 0.0) || !std::isfinite(t))
        throw domain_error(detail::concat("t must be positive for the representation, got ", t,
                                          " (use eval_at_zero for t = 0)"));
    detail::require_representable(p, region);

    const SpectralDensity f(p);
    auto integrand = [&](double v) -> Complex { return std::exp(-v * t) * f(v); };
    const auto quad = integrate_semi_infinite(integrand, detail::density_hint(p, t), tol);

    EvalOutcome out;
    out.region = region;
    out.method = Method::IntegralRepr;
    out.residue = residue_term(t, p);
    out.integral = quad.value;
    out.value = out.residue + out.integral;
    out.error_estimate = quad.abs_error_estimate + detail::rounding_of(out.residue);
    return out;
}

/// E_a(lambda t^a) through the beta = 1 specialisation
/// (1/a) e^{t lambda^{1/a}} - (lambda sin(pi a)/pi) J_lambda(t).
inline EvalOutcome eval_E_alpha(double t, const MLParams& p, double tol = default_quad_tol)
{
    if (p.beta != 1.0)
        throw domain_error(detail::concat("eval_E_alpha requires beta = 1, got ", p.beta));
    const Region region = classify_region(p);
    if (!(t > 0.0) || !std::isfinite(t))
        throw domain_error(detail::concat("t must be positive, got ", t));
    detail::require_representable(p, region);

    const auto j = detail::weighted_inverse_denominator(t, p, p.alpha - 1.0, -p.alpha - 1.0, tol);
    const Complex weight = -p.lambda * sin_pi(p.alpha) / pi;

    EvalOutcome out;
    out.region = region;
    out.residue = residue_term(t, p);
    out.integral = weight * j.value;
    out.value = out.residue + out.integral;
    out.error_estimate = std::abs(weight) * j.abs_error_estimate + detail::rounding_of(out.residue);
    return out;
}

/// t^{a-1} E_{a,a}(lambda t^a) through the beta = alpha specialisation
/// (lambda^{1/a-1}/a) e^{t lambda^{1/a}} + (sin(pi a)/pi) int e^{-ut} u^a / D(u) du.
inline EvalOutcome eval_E_alpha_alpha(double t, const MLParams& p, double tol = default_quad_tol)
{
    if (p.beta != p.alpha)
        throw domain_error(detail::concat("eval_E_alpha_alpha requires beta = alpha, got beta = ",
                                          p.beta, ", alpha = ", p.alpha));
    const Region region = classify_region(p);
    if (t == 0.0)
        throw divergence_error(
            "the beta = alpha integral does not exist at t = 0 (density decays like v^-alpha)");
    if (!(t > 0.0) || !std::isfinite(t))
        throw domain_error(detail::concat("t must be positive, got ", t));
    detail::require_representable(p, region);

    const auto q = detail::weighted_inverse_denominator(t, p, p.alpha, -p.alpha, tol);
    const double weight = sin_pi(p.alpha) / pi;

    EvalOutcome out;
    out.region = region;
    out.residue = residue_term(t, p);
    out.integral = weight * q.value;
    out.value = out.residue + out.integral;
    out.error_estimate = weight * q.abs_error_estimate + detail::rounding_of(out.residue);
    return out;
}

/// The representation at t = 0 for beta in [1, 1+alpha): residue(0) plus the
/// (now purely algebraically decaying) density integral. The value returned is
/// the quadrature sum; error_estimate includes its distance from the closed
/// limit (1 for beta = 1, 0 for beta > 1).
inline EvalOutcome eval_at_zero(const MLParams& p, double tol = default_quad_tol)
{
    const Region region = classify_region(p);
    if (p.beta == p.alpha)
        throw divergence_error("the t = 0 density integral does not exist for beta = alpha");
    if (p.beta < 1.0)
        throw singular_limit_error(detail::concat(
            "t = 0 requires beta in [1, 1+alpha); beta = ", p.beta,
            " < 1 makes t^(beta-1) E(lambda t^alpha) diverge"));
    if (region != Region::ResiduePresent && region != Region::ResidueAbsentNegativeReal)
        throw domain_error(detail::concat(
            "t = 0 evaluation requires |arg lambda| < pi alpha or lambda < 0; region is ",
            to_string(region)));
    detail::require_representable(p, region);

    const SpectralDensity f(p);
    const auto quad = integrate_semi_infinite(f, detail::density_hint(p, 0.0), tol);

    EvalOutcome out;
    out.region = region;
    out.method = Method::IntegralRepr;
    out.residue = residue_term(0.0, p);
    out.integral = quad.value;
    out.value = out.residue + out.integral;
    const double limit = p.beta == 1.0 ? 1.0 : 0.0;
    out.error_estimate = quad.abs_error_estimate + detail::rounding_of(out.residue) +
                         std::abs(out.value - limit);
    return out;
}

/// J_lambda(t) = int_0^inf e^{-ut} u^{a-1} / D(u) du, finite on [0, inf).
inline QuadOutcome<Complex> eval_J(double t, const MLParams& p, double tol = default_quad_tol)
{
    const Region region = classify_region(p);
    if (!(t >= 0.0) || !std::isfinite(t))
        throw domain_error(detail::concat("t must be non-negative, got ", t));
    if (region != Region::ResiduePresent)
        throw domain_error(detail::concat("J_lambda requires |arg lambda| < pi alpha; region is ",
                                          to_string(region)));
    detail::require_representable(p, region);
    return detail::weighted_inverse_denominator(t, p, p.alpha - 1.0, -p.alpha - 1.0, tol);
}

/// Auto mode: the series while |lambda t^a| <= 30 and its cancellation keeps
/// the rounding error below tol, otherwise the representation.
inline EvalOutcome evaluate_auto(double t, const MLParams& p, double tol = default_quad_tol)
{
    const Region region = classify_region(p);
    if (!(t >= 0.0) || !std::isfinite(t))
        throw domain_error(detail::concat("t must be non-negative, got ", t));
    const double z_mod = std::abs(p.lambda) * std::pow(t, p.alpha);
    if (t == 0.0 || z_mod <= series_z_max) {
        try {
            const SeriesOutcome s = scaled_series(t, p, std::min(tol, 1e-15));
            const double scale = std::max(1.0, std::abs(s.value));
            if (t == 0.0 || region == Region::OutOfScope || s.rounding_bound <= tol * scale)
                return {s.value, Method::Series, region, s.rounding_bound + s.truncation_bound, {}, {}};
        } catch (const accuracy_regime_error&) {
            // fall through to the representation
        }
    }
    return eval_repr(t, p, tol);
}

/// T beyond which e^{-sT} suppresses the Laplace integrand below tol.
inline double laplace_horizon(double s, const MLParams& p, double tol)
{
    return (std::log(1.0 / tol) + 5.0) / (s - std::pow(std::abs(p.lambda), 1.0 / p.alpha));
}

/// s^{a-b} / (s^a - lambda), the Laplace transform of t^{b-1} E_{a,b}(lambda t^a).
inline Complex laplace_transform_exact(double s, const MLParams& p)
{
    return std::pow(s, p.alpha - p.beta) / (std::pow(s, p.alpha) - p.lambda);
}

/// int_0^T e^{-st} t^{b-1} E_{a,b}(lambda t^a) dt, the integrand evaluated in
/// auto mode.
inline QuadOutcome<Complex> laplace_identity_integral(double s, const MLParams& p, double horizon,
                                                      double tol = default_quad_tol)
{
    validate(p);
    const double radius = std::pow(std::abs(p.lambda), 1.0 / p.alpha);
    if (!(s > radius))
        throw domain_error(detail::concat("s must exceed |lambda|^(1/alpha) = ", radius, ", got ", s));
    if (!(horizon > 0.0))
        throw domain_error(detail::concat("horizon must be positive, got ", horizon));

    const double inner_tol = std::min(tol * 1e-2, 1e-12);
    auto integrand = [&](double t) -> Complex {
        return std::exp(-s * t) * evaluate_auto(t, p, inner_tol).value;
    };
    return integrate_from_origin(integrand, horizon, p.beta - 1.0, tol);
}

/// |int_0^T e^{-st} t^{b-1} E_{a,b}(lambda t^a) dt - s^{a-b} / (s^a - lambda)|.
inline double laplace_identity_gap(double s, const MLParams& p, double horizon,
                                   double tol = default_quad_tol)
{
    const auto q = laplace_identity_integral(s, p, horizon, tol);
    return std::abs(q.value - laplace_transform_exact(s, p));
}

} // namespace mlkit

#pragma once

// Spectral density of the real-axis integral, its denominator and the residue
// contributed by the pole at lambda^{1/alpha}.

#include "mlkit/core.hpp"

#include <cmath>

namespace mlkit {

struct KernelDiagnostics {
    double origin_exponent = 0.0; // power of v in f(v) as v -> 0
    double tail_exponent = 0.0;   // power of v in f(v) as v -> infinity
    double pole_margin = 0.0;     // pi alpha - |arg lambda|, radians
};

/// Leading powers of the density at both ends. A vanishing sine coefficient
/// promotes the next term: beta = 1 decays like v^{-alpha-1}, and beta = alpha
/// starts like v^{alpha}.
inline KernelDiagnostics diagnostics(const MLParams& p)
{
    validate(p);
    KernelDiagnostics d;
    const bool lambda_term_vanishes = sin_pi(p.alpha - p.beta) == 0.0;
    const bool power_term_vanishes = sin_pi(p.beta) == 0.0;
    d.origin_exponent = lambda_term_vanishes ? 2.0 * p.alpha - p.beta : p.alpha - p.beta;
    d.tail_exponent = power_term_vanishes ? -p.alpha - p.beta : -p.beta;
    d.pole_margin = pole_margin(p);
    return d;
}

/// v^{2a} - 2 lambda v^a cos(a pi) + lambda^2 in factored form
/// (v^a - lambda e^{i pi a})(v^a - lambda e^{-i pi a}), with the near-pole
/// guard. Reused by the density and the J integrand.
class Denominator {
public:
    explicit Denominator(const MLParams& p)
        : alpha_(p.alpha), lambda_(p.lambda), abs_lambda_(std::abs(p.lambda)),
          cos_(cos_pi(p.alpha))
    {
        const Complex rot{cos_, sin_pi(p.alpha)};
        root_plus_ = p.lambda * rot;
        root_minus_ = p.lambda * std::conj(rot);
    }

    Complex at_power(double w) const
    {
        const Complex d = (w - root_plus_) * (w - root_minus_);
        const double scale = w * w + 2.0 * abs_lambda_ * w * std::fabs(cos_) + abs_lambda_ * abs_lambda_;
        if (std::abs(d) <= 8.0 * std::numeric_limits<double>::epsilon() * scale ||
            std::abs(d) < 1e-300)
            throw near_pole_error(detail::concat(
                "denominator vanishes at v^alpha = ", w, " (lambda on the wedge boundary |arg lambda| = pi alpha)"));
        return d;
    }

    Complex operator()(double v) const { return at_power(std::pow(v, alpha_)); }

private:
    double alpha_;
    Complex lambda_;
    double abs_lambda_;
    double cos_;
    Complex root_plus_;
    Complex root_minus_;
};

inline Complex denominator(double v, const MLParams& p)
{
    validate(p);
    if (!(v > 0.0))
        throw domain_error(detail::concat("v must be positive, got ", v));
    return Denominator(p)(v);
}

/// f_{a,b}(v) = (1/pi) v^{a-b} (v^a sin(b pi) + lambda sin((a-b) pi)) / D(v).
class SpectralDensity {
public:
    explicit SpectralDensity(const MLParams& p)
        : alpha_(p.alpha), origin_power_(p.alpha - p.beta), lambda_(p.lambda),
          sin_beta_(sin_pi(p.beta)), sin_alpha_beta_(sin_pi(p.alpha - p.beta)), denom_(p)
    {
    }

    Complex operator()(double v) const
    {
        const double w = std::pow(v, alpha_);
        const Complex num = w * sin_beta_ + lambda_ * sin_alpha_beta_;
        return std::pow(v, origin_power_) / pi * num / denom_.at_power(w);
    }

private:
    double alpha_;
    double origin_power_;
    Complex lambda_;
    double sin_beta_;
    double sin_alpha_beta_;
    Denominator denom_;
};

inline Complex density(double v, const MLParams& p)
{
    validate(p);
    if (!(v > 0.0))
        throw domain_error(detail::concat("v must be positive, got ", v));
    return SpectralDensity(p)(v);
}

/// Residue of e^{zt} z^{a-b} / (z^a - lambda) at z = lambda^{1/a}; zero unless
/// the pole lies on the principal sheet (|arg lambda| < pi a).
inline Complex residue_term(double t, const MLParams& p)
{
    if (!(t >= 0.0))
        throw domain_error(detail::concat("t must be non-negative, got ", t));
    if (classify_region(p) != Region::ResiduePresent)
        return {};
    const Complex root = principal_power(p.lambda, 1.0 / p.alpha);
    return std::exp(root * t) * principal_power(p.lambda, (1.0 - p.beta) / p.alpha) / p.alpha;
}

/// |f_{a,a}(v) + v f_{a,1}(v) / lambda|; vanishes identically.
inline double density_relation_check(double v, const MLParams& p)
{
    MLParams pa = p;
    pa.beta = p.alpha;
    MLParams p1 = p;
    p1.beta = 1.0;
    const Complex fa = density(v, pa);
    const Complex f1 = density(v, p1);
    return std::abs(fa + v * f1 / p.lambda);
}

} // namespace mlkit

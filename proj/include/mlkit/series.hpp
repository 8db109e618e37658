#pragma once

// Taylor series E_{a,b}(z) = sum_k z^k / Gamma(k a + b), the reference oracle
// for moderate |z|.

#include "mlkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <type_traits>

#if defined(MLKIT_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace mlkit {

/// Beyond this modulus the series is refused; see accuracy_regime_error.
inline constexpr double series_z_max = 30.0;

struct SeriesOutcome {
    Complex value;
    std::size_t terms_used = 0;
    double truncation_bound = 0.0; // bound on the dropped tail, abs units
    double rounding_bound = 0.0;   // bound on accumulated rounding, abs units
    double magnitude_sum = 0.0;    // sum of |term_k|; cancellation indicator
};

/// Arithmetic needed by the series kernel, per working precision.
template <class Real>
struct precision_traits;

template <>
struct precision_traits<double> {
    static constexpr double epsilon = std::numeric_limits<double>::epsilon();
    static double log_gamma(double x) { return mlkit::log_gamma(x); }
    static double gamma(double x) { return real_gamma(x); }
    static double exp(double x) { return std::exp(x); }
    static double log(double x) { return std::log(x); }
    static double pow(double x, double y) { return std::pow(x, y); }
    static double sin_pi(double x) { return mlkit::sin_pi(x); }
    static double cos_pi(double x) { return mlkit::cos_pi(x); }
    static double fabs(double x) { return std::fabs(x); }
    static bool finite(double x) { return std::isfinite(x); }
    static double hypot(double x, double y) { return std::hypot(x, y); }
    static double atan2(double y, double x) { return std::atan2(y, x); }
    static double pi() { return mlkit::pi; }
};

#if defined(MLKIT_HAVE_QUADMATH)
template <>
struct precision_traits<__float128> {
    using R = __float128;
    static constexpr R epsilon = 0x1p-112; // FLT128_EPSILON without the Q suffix
    static R log_gamma(R x) { return lgammaq(x); }
    static R gamma(R x) { return tgammaq(x); }
    static R exp(R x) { return expq(x); }
    static R log(R x) { return logq(x); }
    static R pow(R x, R y) { return powq(x, y); }
    static R sin_pi(R x)
    {
        R r = fmodq(x, 2);
        if (r > 1) r -= 2;
        else if (r < -1) r += 2;
        if (r > R(0.5)) r = 1 - r;
        else if (r < R(-0.5)) r = -1 - r;
        return sinq(pi() * r);
    }
    static R cos_pi(R x)
    {
        R r = fmodq(fabsq(x), 2);
        if (r > 1) r = 2 - r;
        if (r < R(0.25)) return cosq(pi() * r);
        return sin_pi(R(0.5) - r);
    }
    static R fabs(R x) { return fabsq(x); }
    static bool finite(R x) { return finiteq(x); }
    static R hypot(R x, R y) { return hypotq(x, y); }
    static R atan2(R y, R x) { return atan2q(y, x); }
    static R pi() { return acosq(-1); }
};
#endif

namespace detail {

// Neumaier-compensated accumulator.
template <class Real>
struct compensated_sum {
    Real sum = 0;
    Real carry = 0;
    void add(Real x)
    {
        using T = precision_traits<Real>;
        const Real s = sum + x;
        if (T::fabs(sum) >= T::fabs(x))
            carry += (sum - s) + x;
        else
            carry += (x - s) + sum;
        sum = s;
    }
    Real value() const { return sum + carry; }
};

} // namespace detail

/// Series summation in working precision Real. Terms are accumulated until the
/// ratio |term_{k+1}/term_k| (which decreases in k by log-convexity of Gamma)
/// is below one and the resulting geometric tail bound drops under
/// tol * max(1, |partial|).
template <class Real>
SeriesOutcome ml_series_in(Complex z, double alpha, double beta, double tol)
{
    using T = precision_traits<Real>;
    if (!(alpha > 0.0))
        throw domain_error(detail::concat("alpha must be positive, got ", alpha));
    if (!(beta > 0.0))
        throw domain_error(detail::concat("beta must be positive, got ", beta));
    if (!(tol > 0.0))
        throw domain_error(detail::concat("tol must be positive, got ", tol));
    const double modulus = std::abs(z);
    if (!(modulus <= series_z_max))
        throw accuracy_regime_error(detail::concat(
            "|z| = ", modulus, " exceeds the series limit ", series_z_max,
            "; use the integral representation"));

    SeriesOutcome out;
    if (modulus == 0.0) {
        out.value = 1.0 / real_gamma(beta);
        out.terms_used = 1;
        out.magnitude_sum = std::abs(out.value.real());
        out.rounding_bound = T::epsilon * out.magnitude_sum;
        return out;
    }

    const Real a = alpha;
    const Real b = beta;
    const Real zre = z.real();
    const Real zim = z.imag();
    const bool real_axis = z.imag() == 0.0;
    const Real log_mod = T::log(T::hypot(zre, zim));
    // phase in units of pi, computed in working precision; exactly 1 for z < 0
    const Real turns = real_axis ? Real(z.real() < 0.0 ? 1 : 0) : T::atan2(zim, zre) / T::pi();

    auto log_term_mag = [&](std::size_t k) {
        const Real kk = static_cast<Real>(k);
        return kk * log_mod - T::log_gamma(kk * a + b);
    };

    detail::compensated_sum<Real> re, im;
    Real mag_sum = 0;
    constexpr std::size_t k_min = 8;
    constexpr std::size_t k_cap = 200000;
    const Real tol_r = tol;

    // double path: Gamma directly while it is finite, log-gamma beyond
    auto term_mag = [&](std::size_t k, Real log_mag) -> Real {
        if constexpr (std::is_same_v<Real, double>) {
            const double arg = static_cast<double>(k) * alpha + beta;
            if (arg < 170.0 && log_mag < 700.0 && static_cast<double>(k) * log_mod < 700.0)
                return std::pow(modulus, static_cast<double>(k)) / real_gamma(arg);
        }
        return T::exp(log_mag);
    };

    Real log_mag_k = log_term_mag(0);
    for (std::size_t k = 0;; ++k) {
        const Real mag = term_mag(k, log_mag_k);
        if (!T::finite(mag))
            throw accuracy_regime_error(detail::concat(
                "series terms overflow the working precision at |z| = ", modulus));
        const Real phase = static_cast<Real>(k) * turns;
        const Real tre = mag * T::cos_pi(phase);
        const Real tim = real_axis ? Real(0) : mag * T::sin_pi(phase);
        re.add(tre);
        im.add(tim);
        mag_sum += mag;

        const Real log_mag_next = log_term_mag(k + 1);
        const Real ratio = T::exp(log_mag_next - log_mag_k);
        const Real partial = T::hypot(re.value(), im.value());
        const Real scale = partial > 1 ? partial : Real(1);
        if (k + 1 >= k_min && ratio < 1) {
            const Real tail = mag * ratio / (1 - ratio);
            if (mag < tol_r * scale && tail < tol_r * scale) {
                out.terms_used = k + 1;
                out.truncation_bound = static_cast<double>(tail);
                break;
            }
        }
        if (k + 1 >= k_cap)
            throw error("series failed to terminate");
        log_mag_k = log_mag_next;
    }
    out.value = Complex(static_cast<double>(re.value()), static_cast<double>(im.value()));
    out.magnitude_sum = static_cast<double>(mag_sum);
    // per-term relative error of the log-gamma route is a few dozen ulps
    out.rounding_bound = static_cast<double>(Real(64) * T::epsilon * mag_sum);
    return out;
}

/// E_{alpha,beta}(z) by its power series in double precision.
inline SeriesOutcome ml_series(Complex z, double alpha, double beta, double tol = 1e-15)
{
    return ml_series_in<double>(z, alpha, beta, tol);
}

/// t^{beta-1} E_{alpha,beta}(lambda t^alpha) by the series. At t = 0 the limit
/// is 1 for beta = 1 and 0 for beta > 1.
template <class Real = double>
SeriesOutcome scaled_series(double t, const MLParams& p, double tol = 1e-15)
{
    validate(p);
    if (!(t >= 0.0) || !std::isfinite(t))
        throw domain_error(detail::concat("t must be non-negative, got ", t));
    if (t == 0.0) {
        if (p.beta < 1.0)
            throw singular_limit_error(detail::concat(
                "t = 0 requires beta >= 1: t^(beta-1) E(lambda t^alpha) diverges for beta = ",
                p.beta, " < 1"));
        SeriesOutcome out;
        out.value = p.beta == 1.0 ? Complex{1.0, 0.0} : Complex{};
        out.terms_used = 1;
        out.magnitude_sum = std::abs(out.value);
        return out;
    }
    const Complex z = p.lambda * std::pow(t, p.alpha);
    SeriesOutcome out = ml_series_in<Real>(z, p.alpha, p.beta, tol);
    const double scale = std::pow(t, p.beta - 1.0);
    out.value *= scale;
    out.truncation_bound *= scale;
    out.rounding_bound *= scale;
    out.magnitude_sum *= scale;
    return out;
}

} // namespace mlkit

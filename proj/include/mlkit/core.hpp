#pragma once

// Scalar numerics shared by every other module: error types, exact-argument
// trigonometry, real gamma, principal-branch powers and parameter regions.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mlkit {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Errors

/// Base for every failure raised by the toolkit.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter lies outside the admissible domain; the message names the bound.
class domain_error : public error {
public:
    using error::error;
};

/// t = 0 requested where the function has no finite limit (beta < 1).
class singular_limit_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// The t = 0 integral does not exist (beta == alpha).
class divergence_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// A denominator root sits on (or numerically at) the integration path.
class near_pole_error : public error {
public:
    using error::error;
};

/// Requested |z| is beyond the range where the power series is trustworthy.
class accuracy_regime_error : public error {
public:
    using error::error;
};

/// A closed form was asked for at a pole of its sine denominator.
class pole_error : public domain_error {
public:
    using domain_error::domain_error;
};

namespace detail {

template <class... Args>
std::string concat(const Args&... args)
{
    std::ostringstream os;
    os.precision(17);
    (os << ... << args);
    return os.str();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Trigonometry with the argument measured in units of pi. Integer arguments
// give exact zeros, which keeps sin(beta*pi) at beta = 1 from leaving a
// spurious 1e-16 tail in the spectral density.

inline double sin_pi(double x)
{
    if (!std::isfinite(x))
        return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(x, 2.0); // exact
    if (r > 1.0)
        r -= 2.0;
    else if (r < -1.0)
        r += 2.0;
    if (r > 0.5)
        r = 1.0 - r;
    else if (r < -0.5)
        r = -1.0 - r;
    return std::sin(pi * r);
}

inline double cos_pi(double x)
{
    if (!std::isfinite(x))
        return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(std::fabs(x), 2.0);
    if (r > 1.0)
        r = 2.0 - r; // r in [0, 1]
    if (r < 0.25)
        return std::cos(pi * r);
    return sin_pi(0.5 - r); // Sterbenz: exact for r in [0.25, 1]
}

// ---------------------------------------------------------------------------
// Gamma function for real positive arguments (Lanczos, g = 607/128, n = 15).

namespace detail {

inline constexpr double lanczos_g = 607.0 / 128.0;

inline constexpr std::array<double, 15> lanczos_coef = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

// Lanczos sum A(x) for Gamma(x + 1) = sqrt(2 pi) (x+g+1/2)^(x+1/2) e^-(x+g+1/2) A(x).
inline double lanczos_sum(double x)
{
    double s = lanczos_coef[0];
    for (std::size_t i = 1; i < lanczos_coef.size(); ++i)
        s += lanczos_coef[i] / (x + static_cast<double>(i));
    return s;
}

inline void require_positive_gamma_arg(double x)
{
    if (!(x > 0.0))
        throw domain_error(concat("gamma argument must be positive, got ", x));
}

} // namespace detail

/// Gamma(x) for x > 0. Overflows to +inf beyond x ~ 171.6.
inline double real_gamma(double x)
{
    detail::require_positive_gamma_arg(x);
    if (x < 1.0)
        return real_gamma(x + 1.0) / x;
    if (x == std::floor(x) && x <= 23.0) {
        double f = 1.0;
        for (double k = 2.0; k < x; k += 1.0)
            f *= k;
        return f;
    }
    const double y = x - 1.0;
    const double base = y + detail::lanczos_g + 0.5;
    // split the power so intermediate values stay finite up to x ~ 171
    const double half = std::pow(base, 0.5 * (y + 0.5));
    return std::sqrt(2.0 * pi) * detail::lanczos_sum(y) * (half * std::exp(-base)) * half;
}

/// log Gamma(x) for x > 0.
inline double log_gamma(double x)
{
    detail::require_positive_gamma_arg(x);
    if (x < 1.0)
        return log_gamma(x + 1.0) - std::log(x);
    if (x < 100.0)
        return std::log(real_gamma(x));
    const double y = x - 1.0;
    const double base = y + detail::lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (y + 0.5) * std::log(base) - base +
           std::log(detail::lanczos_sum(y));
}

// ---------------------------------------------------------------------------
// Principal-branch complex power.

/// arg(z) in (-pi, pi]; the negative real axis maps to +pi regardless of the
/// sign of a zero imaginary part.
inline double principal_arg(Complex z)
{
    if (z.imag() == 0.0)
        return z.real() < 0.0 ? pi : 0.0;
    return std::arg(z);
}

/// base^exponent = exp(exponent * (ln|base| + i arg base)), arg in (-pi, pi].
inline Complex principal_power(Complex base, double exponent)
{
    if (base == Complex{}) {
        if (exponent > 0.0)
            return {};
        throw domain_error(detail::concat("zero base requires a positive exponent, got ", exponent));
    }
    if (base.imag() == 0.0 && base.real() > 0.0)
        return {std::pow(base.real(), exponent), 0.0};
    const double mag = std::pow(std::abs(base), exponent);
    // the phase in units of pi keeps integer multiples exact
    const double turns = exponent * (principal_arg(base) / pi);
    return {mag * cos_pi(turns), mag * sin_pi(turns)};
}

// ---------------------------------------------------------------------------
// Parameters and regions.

struct MLParams {
    double alpha = 0.5;
    double beta = 1.0;
    Complex lambda{1.0, 0.0};
};

enum class Region {
    ResiduePresent,            // lambda != 0, |arg lambda| < pi alpha
    ResidueAbsentNegativeReal, // lambda real, lambda < 0
    ResidueAbsentExtended,     // pi alpha <= |arg lambda| < pi, lambda not real-negative
    OutOfScope                 // lambda == 0
};

inline const char* to_string(Region r)
{
    switch (r) {
    case Region::ResiduePresent: return "ResiduePresent";
    case Region::ResidueAbsentNegativeReal: return "ResidueAbsentNegativeReal";
    case Region::ResidueAbsentExtended: return "ResidueAbsentExtended";
    case Region::OutOfScope: return "OutOfScope";
    }
    return "?";
}

/// Throws domain_error naming the violated bound.
inline void validate(const MLParams& p)
{
    if (!std::isfinite(p.alpha) || !(p.alpha > 0.0 && p.alpha < 1.0))
        throw domain_error(detail::concat("alpha must lie in (0,1), got ", p.alpha));
    if (!std::isfinite(p.beta) || !(p.beta > 0.0 && p.beta < 1.0 + p.alpha))
        throw domain_error(detail::concat("beta must lie in (0, 1+alpha) = (0, ", 1.0 + p.alpha,
                                          "), got ", p.beta));
    if (!std::isfinite(p.lambda.real()) || !std::isfinite(p.lambda.imag()))
        throw domain_error("lambda must be finite");
}

inline Region classify_region(const MLParams& p)
{
    validate(p);
    if (p.lambda == Complex{})
        return Region::OutOfScope;
    if (p.lambda.imag() == 0.0 && p.lambda.real() < 0.0)
        return Region::ResidueAbsentNegativeReal;
    if (std::fabs(principal_arg(p.lambda)) < pi * p.alpha)
        return Region::ResiduePresent;
    return Region::ResidueAbsentExtended;
}

/// Signed angular distance pi*alpha - |arg lambda| between the wedge edge and
/// lambda; the denominator roots lambda e^{+-i pi alpha} touch the positive
/// real axis when it vanishes.
inline double pole_margin(const MLParams& p)
{
    return pi * p.alpha - std::fabs(principal_arg(p.lambda));
}

/// Evaluation refuses when the roots come closer than this to the path.
inline constexpr double min_pole_margin = 1e-3;

} // namespace mlkit

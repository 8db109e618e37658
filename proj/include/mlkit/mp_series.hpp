#pragma once

// Multiple-precision series oracle (MPFR). The working precision is sized from
// the largest term, so alternating sums that cancel from e^{4000} down to
// O(1) still come out correct in double. For alpha = p/q (to within a few
// ulps, which covers every decimal grid value) Gamma(k alpha + beta) is
// advanced by the exact recurrence Gamma(x + p) = Gamma(x) x (x+1)...(x+p-1)
// every q steps; the function changes by O(1e-17) under that rounding of
// alpha. Otherwise each term calls mpfr_gamma.

#if defined(MLKIT_HAVE_MPFR)

#include "mlkit/core.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace mlkit {

namespace detail {

class mp_real {
public:
    explicit mp_real(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    mp_real(mpfr_prec_t bits, double x)
    {
        mpfr_init2(v_, bits);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    mp_real(const mp_real& o)
    {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    mp_real& operator=(const mp_real&) = delete;
    ~mp_real() { mpfr_clear(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

struct rational {
    long p = 0;
    long q = 1;
};

inline std::optional<rational> as_small_rational(double x, long max_den = 1000)
{
    for (long q = 1; q <= max_den; ++q) {
        const double p = std::round(x * static_cast<double>(q));
        if (std::fabs(x - p / static_cast<double>(q)) <= 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(x))
            return rational{static_cast<long>(p), q};
    }
    return std::nullopt;
}

} // namespace detail

struct MpSeriesOutcome {
    Complex value;
    std::size_t terms_used = 0;
    long precision_bits = 0;
    double peak_log_term = 0.0; // natural log of the largest term
    bool rational_alpha = false;
};

/// t^{b-1} E_{a,b}(lambda t^a) summed in MPFR; the result is correct to
/// roughly 1e-30 relative to max(1, |value|).
inline MpSeriesOutcome mp_scaled_series(double t, const MLParams& p)
{
    validate(p);
    if (!(t > 0.0) || !std::isfinite(t))
        throw domain_error(detail::concat("t must be positive, got ", t));

    const auto rat = detail::as_small_rational(p.alpha);
    const double log_mod = std::log(std::abs(p.lambda)) + p.alpha * std::log(t);

    // locate the peak term and the end of the sum in double
    constexpr double tail_nats = 92.0; // terms below e^-92 ~ 1e-40 are dropped
    double peak = -std::numeric_limits<double>::infinity();
    std::size_t k_end = 8;
    if (p.lambda != Complex{}) {
        for (std::size_t k = 0;; ++k) {
            const double kk = static_cast<double>(k);
            const double lt = kk * log_mod - log_gamma(kk * p.alpha + p.beta);
            peak = std::max(peak, lt);
            const double next = (kk + 1.0) * log_mod - log_gamma((kk + 1.0) * p.alpha + p.beta);
            if (k >= 8 && next < lt && lt < -tail_nats) {
                k_end = k + 1;
                break;
            }
            if (k > 50'000'000)
                throw error("multiple-precision series did not terminate");
        }
    } else {
        k_end = 1;
        peak = -log_gamma(p.beta);
    }

    const long bits = static_cast<long>(std::max(0.0, peak) / std::log(2.0) + 192.0 +
                                        2.0 * std::log2(static_cast<double>(k_end) + 1.0));
    using detail::mp_real;

    mp_real alpha_mp(bits, p.alpha);
    if (rat) {
        mpfr_set_si(alpha_mp.get(), rat->p, MPFR_RNDN);
        mpfr_div_si(alpha_mp.get(), alpha_mp.get(), rat->q, MPFR_RNDN);
    }
    mp_real beta_mp(bits, p.beta);
    mp_real t_mp(bits, t);

    // z = lambda t^alpha
    mp_real ta(bits);
    mpfr_pow(ta.get(), t_mp.get(), alpha_mp.get(), MPFR_RNDN);
    mp_real zr(bits, p.lambda.real());
    mp_real zi(bits, p.lambda.imag());
    mpfr_mul(zr.get(), zr.get(), ta.get(), MPFR_RNDN);
    mpfr_mul(zi.get(), zi.get(), ta.get(), MPFR_RNDN);
    const bool real_axis = p.lambda.imag() == 0.0;

    mp_real wr(bits, 1.0), wi(bits, 0.0); // z^k
    mp_real sr(bits, 0.0), si(bits, 0.0);
    mp_real x(bits), g(bits), tr(bits), ti(bits), a(bits), b(bits);

    // Gamma(k alpha + beta) for k mod q, advanced block by block
    std::vector<mp_real> gam;
    if (rat) {
        gam.reserve(static_cast<std::size_t>(rat->q));
        for (long r = 0; r < rat->q; ++r) {
            mpfr_mul_si(x.get(), alpha_mp.get(), r, MPFR_RNDN);
            mpfr_add(x.get(), x.get(), beta_mp.get(), MPFR_RNDN);
            gam.emplace_back(bits);
            mpfr_gamma(gam.back().get(), x.get(), MPFR_RNDN);
        }
    }

    for (std::size_t k = 0; k < k_end; ++k) {
        if (rat) {
            const auto r = static_cast<std::size_t>(k % static_cast<std::size_t>(rat->q));
            if (k >= static_cast<std::size_t>(rat->q)) {
                // x = (k - q) alpha + beta; multiply by x (x+1) ... (x+p-1)
                mpfr_mul_si(x.get(), alpha_mp.get(), static_cast<long>(k) - rat->q, MPFR_RNDN);
                mpfr_add(x.get(), x.get(), beta_mp.get(), MPFR_RNDN);
                for (long j = 0; j < rat->p; ++j) {
                    mpfr_add_si(a.get(), x.get(), j, MPFR_RNDN);
                    mpfr_mul(gam[r].get(), gam[r].get(), a.get(), MPFR_RNDN);
                }
            }
            mpfr_set(g.get(), gam[r].get(), MPFR_RNDN);
        } else {
            mpfr_mul_ui(x.get(), alpha_mp.get(), static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_add(x.get(), x.get(), beta_mp.get(), MPFR_RNDN);
            mpfr_gamma(g.get(), x.get(), MPFR_RNDN);
        }
        mpfr_div(tr.get(), wr.get(), g.get(), MPFR_RNDN);
        mpfr_add(sr.get(), sr.get(), tr.get(), MPFR_RNDN);
        if (!real_axis) {
            mpfr_div(ti.get(), wi.get(), g.get(), MPFR_RNDN);
            mpfr_add(si.get(), si.get(), ti.get(), MPFR_RNDN);
        }
        // w *= z
        if (real_axis) {
            mpfr_mul(wr.get(), wr.get(), zr.get(), MPFR_RNDN);
        } else {
            mpfr_mul(a.get(), wr.get(), zr.get(), MPFR_RNDN);
            mpfr_mul(b.get(), wi.get(), zi.get(), MPFR_RNDN);
            mpfr_mul(tr.get(), wr.get(), zi.get(), MPFR_RNDN);
            mpfr_mul(ti.get(), wi.get(), zr.get(), MPFR_RNDN);
            mpfr_sub(wr.get(), a.get(), b.get(), MPFR_RNDN);
            mpfr_add(wi.get(), tr.get(), ti.get(), MPFR_RNDN);
        }
    }

    // scale by t^{beta-1}
    mp_real e(bits, p.beta - 1.0);
    mpfr_pow(a.get(), t_mp.get(), e.get(), MPFR_RNDN);
    mpfr_mul(sr.get(), sr.get(), a.get(), MPFR_RNDN);
    mpfr_mul(si.get(), si.get(), a.get(), MPFR_RNDN);

    MpSeriesOutcome out;
    out.value = Complex(sr.to_double(), si.to_double());
    out.terms_used = k_end;
    out.precision_bits = bits;
    out.peak_log_term = peak;
    out.rational_alpha = rat.has_value();
    return out;
}

} // namespace mlkit

#endif

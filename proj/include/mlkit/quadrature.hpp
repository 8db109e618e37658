#pragma once

// Adaptive integration over (0, infinity) for integrands with an algebraic
// singularity at the origin and either exponential or algebraic decay.
//
// The half-line is cut at the split point (and at 1/rate for exponential
// decay). The origin piece uses v = b u^{1/(1+s)}, which turns v^s into a
// bounded integrand; interior pieces are linear or logarithmic; the tail is
// either truncated where e^{-rate v} has fallen below tol, or mapped with
// v = b s^{-1/g} (g = -tail_exponent - 1) when the decay is algebraic.
// Every piece feeds one global priority queue of Gauss-Kronrod 10/21 panels.

#include "mlkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <type_traits>
#include <vector>

namespace mlkit {

struct DecayHint {
    enum class Kind { Exponential, Algebraic };

    Kind kind = Kind::Algebraic;
    double rate = 0.0;            // Exponential: e^{-rate v}
    double tail_exponent = -2.0;  // power of v at infinity (prefactor of e^{-rate v})
    double origin_exponent = 0.0; // power of v at 0
    double scale = 1.0;           // split point between origin and tail regimes

    static DecayHint exponential(double rate, double origin_exponent = 0.0,
                                 double tail_exponent = 0.0, double scale = 1.0)
    {
        return {Kind::Exponential, rate, tail_exponent, origin_exponent, scale};
    }
    static DecayHint algebraic(double tail_exponent, double origin_exponent = 0.0,
                               double scale = 1.0)
    {
        return {Kind::Algebraic, 0.0, tail_exponent, origin_exponent, scale};
    }
};

template <class T>
struct QuadOutcome {
    T value{};
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
    double truncation_point = 0.0; // 0 when the tail was mapped, not truncated
};

/// Budget exhausted before the error goal was met; carries the partial result.
class quadrature_failure : public error {
public:
    quadrature_failure(const std::string& what, Complex partial, double estimate,
                       std::size_t evaluations)
        : error(what), partial_(partial), estimate_(estimate), evaluations_(evaluations)
    {
    }
    Complex partial() const { return partial_; }
    double error_estimate() const { return estimate_; }
    std::size_t evaluations() const { return evaluations_; }

private:
    Complex partial_;
    double estimate_;
    std::size_t evaluations_;
};

inline constexpr std::size_t default_eval_budget = 1'000'000;
inline constexpr double default_quad_tol = 1e-10;

namespace detail {

// Kronrod 21-point abscissae and weights with the embedded 10-point Gauss
// weights (QUADPACK qk21).
inline constexpr double gk21_x[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double gk21_wk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr double g10_w[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Complex& z) { return std::abs(z); }

template <class T>
struct Panel {
    double a = 0.0;
    double b = 0.0;
    std::size_t piece = 0;
    T result{};
    double err = 0.0;
    double resabs = 0.0;
};

template <class T, class G>
Panel<T> gk21(const G& g, double a, double b, std::size_t piece)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    T fv1[10], fv2[10];

    const T fc = g(centr);
    T resg{};
    T resk = gk21_wk[10] * fc;
    double resabs = gk21_wk[10] * magnitude(fc);
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * gk21_x[jtw];
        const T f1 = g(centr - absc);
        const T f2 = g(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += g10_w[j] * (f1 + f2);
        resk += gk21_wk[jtw] * (f1 + f2);
        resabs += gk21_wk[jtw] * (magnitude(f1) + magnitude(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * gk21_x[jtwm1];
        const T f1 = g(centr - absc);
        const T f2 = g(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += gk21_wk[jtwm1] * (f1 + f2);
        resabs += gk21_wk[jtwm1] * (magnitude(f1) + magnitude(f2));
    }
    const T reskh = 0.5 * resk;
    double resasc = gk21_wk[10] * magnitude(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += gk21_wk[j] * (magnitude(fv1[j] - reskh) + magnitude(fv2[j] - reskh));

    Panel<T> p;
    p.a = a;
    p.b = b;
    p.piece = piece;
    p.result = resk * hlgth;
    resabs *= std::fabs(hlgth);
    resasc *= std::fabs(hlgth);
    double err = magnitude((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > uflow / (50.0 * eps))
        err = std::max(eps * 50.0 * resabs, err);
    p.err = err;
    p.resabs = resabs;
    return p;
}

template <class T>
struct Piece {
    std::function<T(double)> g;
    double lo;
    double hi;
};

/// Global adaptive bisection over all pieces. The error goal is
/// max(tol * |I|, tol_abs).
template <class T>
QuadOutcome<T> integrate_pieces(const std::vector<Piece<T>>& pieces, double tol, double tol_abs,
                                std::size_t budget)
{
    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto worse = [](const Panel<T>& x, const Panel<T>& y) { return x.err < y.err; };
    std::vector<Panel<T>> heap; // max-heap on err
    std::vector<Panel<T>> frozen;

    QuadOutcome<T> out;
    T total{};
    double err_total = 0.0;
    auto resum = [&] {
        total = T{};
        err_total = 0.0;
        for (const auto* set : {&heap, &frozen})
            for (const auto& p : *set) {
                total += p.result;
                err_total += p.err;
            }
    };
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        heap.push_back(gk21<T>(pieces[i].g, pieces[i].lo, pieces[i].hi, i));
        std::push_heap(heap.begin(), heap.end(), worse);
        out.evaluations += 21;
    }
    resum();

    std::size_t since_resum = 0;
    for (;;) {
        if (++since_resum == 64) {
            resum(); // keeps the running totals from drifting
            since_resum = 0;
        }
        const double goal = std::max(tol * magnitude(total), tol_abs);
        if (err_total <= goal || heap.empty())
            break;

        std::pop_heap(heap.begin(), heap.end(), worse);
        const Panel<T> worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        const bool too_narrow = !(mid > worst.a && mid < worst.b) ||
                                (worst.b - worst.a) <= 8.0 * eps * std::max(std::fabs(worst.a), std::fabs(worst.b));
        const bool roundoff = worst.err <= 50.0 * eps * worst.resabs;
        if (too_narrow || roundoff) {
            frozen.push_back(worst);
            continue;
        }
        if (out.evaluations + 42 > budget) {
            heap.push_back(worst);
            resum();
            Complex partial{};
            if constexpr (std::is_same_v<T, Complex>)
                partial = total;
            else
                partial = Complex(total, 0.0);
            throw quadrature_failure(
                concat("quadrature did not reach tolerance within ", budget,
                       " integrand evaluations (estimate ", err_total, ", goal ", goal, ")"),
                partial, err_total, out.evaluations);
        }
        const auto& g = pieces[worst.piece].g;
        Panel<T> left = gk21<T>(g, worst.a, mid, worst.piece);
        Panel<T> right = gk21<T>(g, mid, worst.b, worst.piece);
        out.evaluations += 42;
        total += left.result + right.result - worst.result;
        err_total += left.err + right.err - worst.err;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), worse);
    }

    resum();
    out.value = total;
    out.abs_error_estimate = err_total;
    return out;
}

// Cap on the map exponents; beyond it the mapped integrand keeps a mild
// endpoint singularity instead of under/overflowing v.
inline constexpr double max_map_power = 40.0;

template <class T>
bool usable(const T& x)
{
    if constexpr (std::is_same_v<T, Complex>)
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    else
        return std::isfinite(x);
}

/// Integrand of the origin piece: v = b u^p on u in (0, 1].
template <class T, class F>
std::function<T(double)> origin_map(const F& f, double b, double origin_exponent)
{
    const double p = std::min(1.0 / (1.0 + origin_exponent), max_map_power);
    return [&f, b, p](double u) -> T {
        const double v = b * std::pow(u, p);
        if (!(v > 0.0))
            return T{};
        return f(v) * (p * v / u);
    };
}

/// v = lo (hi/lo)^y on y in [0, 1].
template <class T, class F>
std::function<T(double)> log_map(const F& f, double lo, double hi)
{
    const double span = std::log(hi / lo);
    return [&f, lo, span](double y) -> T {
        const double v = lo * std::exp(y * span);
        return f(v) * (v * span);
    };
}

template <class T, class F>
std::function<T(double)> linear_map(const F& f)
{
    return [&f](double v) -> T { return f(v); };
}

/// Algebraic tail: v = b s^{-q} on s in (0, 1], q = 1/(-tail_exponent - 1).
template <class T, class F>
std::function<T(double)> tail_map(const F& f, double b, double tail_exponent)
{
    const double q = std::min(1.0 / (-tail_exponent - 1.0), max_map_power);
    return [&f, b, q](double s) -> T {
        const double v = b * std::pow(s, -q);
        if (!std::isfinite(v))
            return T{};
        return f(v) * (q * v / s);
    };
}

template <class T, class F>
void add_span(std::vector<Piece<T>>& pieces, const F& f, double lo, double hi)
{
    if (!(hi > lo))
        return;
    if (hi / lo > 4.0)
        pieces.push_back({log_map<T>(f, lo, hi), 0.0, 1.0});
    else
        pieces.push_back({linear_map<T>(f), lo, hi});
}

inline void check_hint(const DecayHint& hint)
{
    if (!(hint.origin_exponent > -1.0))
        throw domain_error(concat("origin exponent must exceed -1 for integrability, got ",
                                  hint.origin_exponent));
    if (!(hint.scale > 0.0) || !std::isfinite(hint.scale))
        throw domain_error(concat("split point must be positive, got ", hint.scale));
    if (hint.kind == DecayHint::Kind::Exponential && !(hint.rate > 0.0))
        throw domain_error(concat("exponential decay rate must be positive, got ", hint.rate));
    if (hint.kind == DecayHint::Kind::Algebraic && !(hint.tail_exponent < -1.0))
        throw domain_error(concat("algebraic tail exponent must be below -1, got ",
                                  hint.tail_exponent));
}

} // namespace detail

/// Integral of f over (0, infinity). The result satisfies
/// |value - I| <= max(tol |value|, tol) up to the reliability of the
/// Gauss-Kronrod estimate; the budget caps integrand evaluations.
template <class F>
auto integrate_semi_infinite(const F& f, const DecayHint& hint, double tol = default_quad_tol,
                             std::size_t budget = default_eval_budget)
    -> QuadOutcome<std::invoke_result_t<const F&, double>>
{
    using T = std::invoke_result_t<const F&, double>;
    detail::check_hint(hint);
    if (!(tol > 0.0))
        throw domain_error(detail::concat("tol must be positive, got ", tol));

    std::vector<double> cuts{hint.scale};
    const bool exponential = hint.kind == DecayHint::Kind::Exponential;
    if (exponential && std::isfinite(1.0 / hint.rate))
        cuts.push_back(1.0 / hint.rate);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<detail::Piece<T>> pieces;
    pieces.push_back({detail::origin_map<T>(f, cuts.front(), hint.origin_exponent), 0.0, 1.0});
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        detail::add_span<T>(pieces, f, cuts[i], cuts[i + 1]);

    const double last = cuts.back();
    double truncation = 0.0;
    bool map_tail = !exponential;
    if (exponential) {
        // smallest V with rate (V - last) - max(tail,0) ln(V/last) >= ln(1/tol) + 5
        const double budget_log = std::log(1.0 / tol) + 5.0;
        const double growth = std::max(hint.tail_exponent, 0.0);
        double v = last + budget_log / hint.rate;
        for (int i = 0; i < 50; ++i)
            v = last + (budget_log + growth * std::log(v / last)) / hint.rate;
        truncation = v;
        if (hint.tail_exponent < -1.0 && truncation / last > 1e3)
            map_tail = true; // decay too slow for truncation; the power law carries it
    }
    if (map_tail) {
        if (!(hint.tail_exponent < -1.0))
            throw domain_error(detail::concat("tail exponent ", hint.tail_exponent,
                                      " is not integrable without exponential decay"));
        pieces.push_back({detail::tail_map<T>(f, last, hint.tail_exponent), 0.0, 1.0});
        truncation = 0.0;
    } else {
        detail::add_span<T>(pieces, f, last, truncation);
    }

    auto out = detail::integrate_pieces<T>(pieces, tol, tol, budget);
    out.truncation_point = truncation;
    return out;
}

/// Integral of f over (0, upper] with an algebraic singularity v^s at 0.
template <class F>
auto integrate_from_origin(const F& f, double upper, double origin_exponent,
                           double tol = default_quad_tol,
                           std::size_t budget = default_eval_budget)
    -> QuadOutcome<std::invoke_result_t<const F&, double>>
{
    using T = std::invoke_result_t<const F&, double>;
    if (!(origin_exponent > -1.0))
        throw domain_error(detail::concat("origin exponent must exceed -1, got ", origin_exponent));
    if (!(upper > 0.0) || !std::isfinite(upper))
        throw domain_error(detail::concat("upper limit must be positive and finite, got ", upper));
    std::vector<detail::Piece<T>> pieces;
    pieces.push_back({detail::origin_map<T>(f, upper, origin_exponent), 0.0, 1.0});
    return detail::integrate_pieces<T>(pieces, tol, tol, budget);
}

/// Plain adaptive integral over a finite [lo, hi].
template <class F>
auto integrate_interval(const F& f, double lo, double hi, double tol = default_quad_tol,
                        std::size_t budget = default_eval_budget)
    -> QuadOutcome<std::invoke_result_t<const F&, double>>
{
    using T = std::invoke_result_t<const F&, double>;
    std::vector<detail::Piece<T>> pieces;
    pieces.push_back({detail::linear_map<T>(f), lo, hi});
    return detail::integrate_pieces<T>(pieces, tol, tol, budget);
}

/// v* = max(|lambda|^{1/alpha}, 1): where the denominator changes regime.
inline double split_point(const MLParams& p)
{
    validate(p);
    return std::max(std::pow(std::abs(p.lambda), 1.0 / p.alpha), 1.0);
}

} // namespace mlkit

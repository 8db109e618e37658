#pragma once

// Large-t behaviour of the non-residue part for beta = 1 and beta = alpha.
// Near the origin f_{a,1}(v) = sum_k a_k v^{ka-1} with
// a_k = -sin(k pi a) / (pi lambda^k), and f_{a,a}(v) = -v f_{a,1}(v) / lambda,
// so Watson's lemma gives
//
//   E_a(lambda t^a) - Res      ~ sum_k a_k Gamma(ka)   / t^{ka},
//   t^{a-1} E_{a,a} - Res      ~ sum_k b_k Gamma(ka+1) / t^{ka+1},  b_k = -a_k / lambda.

#include "mlkit/core.hpp"
#include "mlkit/kernel.hpp"
#include "mlkit/representation.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace mlkit {

inline constexpr int max_asymptotic_order = 20;

/// The sup of the weighted defect kept growing when the grid was extended.
class bound_violation_error : public error {
public:
    bound_violation_error(const std::string& what, double first, double extended)
        : error(what), first_(first), extended_(extended)
    {
    }
    double first() const { return first_; }
    double extended() const { return extended_; }

private:
    double first_;
    double extended_;
};

namespace detail {

inline void require_expandable(const MLParams& p)
{
    const Region r = classify_region(p);
    if (r != Region::ResiduePresent && r != Region::ResidueAbsentNegativeReal)
        throw domain_error(detail::concat(
            "the expansion needs |arg lambda| < pi alpha or lambda < 0; region is ", to_string(r)));
}

inline void require_order(int k, int lo, const char* name)
{
    if (k < lo || k > max_asymptotic_order)
        throw domain_error(detail::concat(name, " must lie in [", lo, ", ", max_asymptotic_order,
                                          "], got ", k));
}

} // namespace detail

inline Complex watson_coeff_a(int k, const MLParams& p)
{
    if (k < 1)
        throw domain_error(detail::concat("k must be at least 1, got ", k));
    detail::require_expandable(p);
    return -sin_pi(k * p.alpha) / (pi * principal_power(p.lambda, static_cast<double>(k)));
}

inline Complex watson_coeff_b(int k, const MLParams& p) { return -watson_coeff_a(k, p) / p.lambda; }

struct AsymptoticModel {
    std::vector<Complex> coeffs_a; // a_1 .. a_K
    std::vector<Complex> coeffs_b; // b_1 .. b_K
    int order = 0;
    double alpha = 0.0;
    Complex lambda;

    /// k-th term of the beta = 1 (use_b = false) or beta = alpha expansion.
    Complex term(int k, double t, bool use_b) const
    {
        const double ka = k * alpha;
        if (use_b)
            return coeffs_b[k - 1] * real_gamma(ka + 1.0) * std::pow(t, -ka - 1.0);
        return coeffs_a[k - 1] * real_gamma(ka) * std::pow(t, -ka);
    }
};

inline AsymptoticModel make_model(const MLParams& p, int order)
{
    detail::require_order(order, 1, "order");
    detail::require_expandable(p);
    AsymptoticModel m;
    m.order = order;
    m.alpha = p.alpha;
    m.lambda = p.lambda;
    for (int k = 1; k <= order; ++k) {
        m.coeffs_a.push_back(watson_coeff_a(k, p));
        m.coeffs_b.push_back(-m.coeffs_a.back() / p.lambda);
    }
    return m;
}

namespace detail {

inline bool uses_b(const MLParams& p)
{
    if (p.beta == 1.0)
        return false;
    if (p.beta == p.alpha)
        return true;
    throw domain_error(detail::concat("expansions exist for beta = 1 or beta = alpha only, got beta = ",
                                      p.beta));
}

} // namespace detail

/// Partial sum of the first K expansion terms; the residue is not included.
inline Complex expand_tail(double t, const MLParams& p, int order)
{
    if (!(t > 0.0))
        throw domain_error(detail::concat("t must be positive, got ", t));
    const bool b = detail::uses_b(p);
    const AsymptoticModel m = make_model(p, order);
    Complex sum;
    for (int k = 1; k <= order; ++k)
        sum += m.term(k, t, b);
    return sum;
}

/// Residue plus the expansion cut before its smallest term; the error
/// estimate is the magnitude of the first dropped term.
inline EvalOutcome eval_asymptotic(double t, const MLParams& p, int max_order = max_asymptotic_order)
{
    if (!(t > 0.0) || !std::isfinite(t))
        throw domain_error(detail::concat("t must be positive, got ", t));
    detail::require_order(max_order, 1, "max_order");
    const bool b = detail::uses_b(p);
    const AsymptoticModel m = make_model(p, max_order);

    Complex sum;
    double last = std::numeric_limits<double>::infinity();
    double dropped = 0.0;
    for (int k = 1; k <= max_order; ++k) {
        const Complex term = m.term(k, t, b);
        const double size = std::abs(term);
        if (size > last && size > 0.0) {
            dropped = size;
            break;
        }
        sum += term;
        if (size > 0.0)
            last = size;
        dropped = size;
    }

    EvalOutcome out;
    out.method = Method::Asymptotic;
    out.region = classify_region(p);
    out.residue = residue_term(t, p);
    out.integral = sum;
    out.value = out.residue + sum;
    out.error_estimate = dropped;
    return out;
}

enum class BoundKind { Eq24, Eq25 };

inline const char* to_string(BoundKind k) { return k == BoundKind::Eq24 ? "24" : "25"; }

struct BoundEstimate {
    double constant = 0.0;          // max(grid_sup, asymptotic_floor)
    double t_star = 0.0;            // weighted defect non-increasing from here on
    std::size_t grid_size = 0;
    double grid_sup = 0.0;          // sup of the weighted defect over the considered grid
    double grid_sup_at = 0.0;       // where it is attained
    double asymptotic_floor = 0.0;  // t -> inf limit: |a_1 Gamma(a)| or |b_1 Gamma(a+1)|
    double extended_constant = 0.0; // same estimate with the upper end doubled
};

struct BoundGrid {
    double t_lo = 1e-2;
    double t_hi = 1e3;
    int per_decade = 20;
};

namespace detail {

inline std::vector<double> log_grid(double lo, double hi, int per_decade)
{
    if (!(lo > 0.0 && hi > lo))
        throw domain_error(concat("grid needs 0 < t_lo < t_hi, got [", lo, ", ", hi, "]"));
    if (per_decade < 1)
        throw domain_error(concat("per_decade must be positive, got ", per_decade));
    const double decades = std::log10(hi / lo);
    const auto n = static_cast<std::size_t>(std::ceil(decades * per_decade - 1e-9)) + 1;
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i)
        t[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(n - 1));
    return t;
}

struct WeightedScan {
    double sup = 0.0;
    double sup_at = 0.0;
    double t_star = 0.0;
};

inline WeightedScan scan_weighted(const std::vector<double>& t, const MLParams& p, BoundKind kind,
                                  double tol)
{
    const double weight_power = kind == BoundKind::Eq24 ? p.alpha : p.alpha + 1.0;
    std::vector<double> w(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        // the non-residue part, computed directly so no residue cancels
        const EvalOutcome e = eval_repr(t[i], p, tol);
        w[i] = std::pow(t[i], weight_power) * std::abs(e.integral);
    }
    std::size_t star = t.size() - 1;
    while (star > 0 && w[star] <= w[star - 1] * (1.0 + 1e-9))
        --star;
    WeightedScan s;
    s.t_star = t[star];
    const std::size_t from = kind == BoundKind::Eq24 ? 0 : star;
    for (std::size_t i = from; i < t.size(); ++i) {
        if (w[i] > s.sup) {
            s.sup = w[i];
            s.sup_at = t[i];
        }
    }
    return s;
}

} // namespace detail

/// Empirical K (Eq24, weight t^a, beta = 1) or L (Eq25, weight t^{a+1},
/// beta = alpha, only t >= t_star). The scan is repeated with the upper end
/// doubled; growth beyond 1% raises bound_violation_error.
inline BoundEstimate estimate_bound(double alpha, Complex lambda, BoundKind kind,
                                    const BoundGrid& grid = {}, double tol = 1e-12)
{
    MLParams p{alpha, 1.0, lambda};
    if (kind == BoundKind::Eq25)
        p.beta = alpha;
    detail::require_expandable(p);
    detail::require_representable(p, classify_region(p));

    const auto t = detail::log_grid(grid.t_lo, grid.t_hi, grid.per_decade);
    if (t.size() < 100)
        throw domain_error(detail::concat("bound grid needs at least 100 points, got ", t.size()));
    const auto scan = detail::scan_weighted(t, p, kind, tol);

    BoundEstimate out;
    out.grid_size = t.size();
    out.t_star = scan.t_star;
    out.grid_sup = scan.sup;
    out.grid_sup_at = scan.sup_at;
    out.asymptotic_floor = kind == BoundKind::Eq24
                               ? std::abs(watson_coeff_a(1, p)) * real_gamma(alpha)
                               : std::abs(watson_coeff_b(1, p)) * real_gamma(alpha + 1.0);
    out.constant = std::max(out.grid_sup, out.asymptotic_floor);

    const auto t2 = detail::log_grid(grid.t_lo, 2.0 * grid.t_hi, grid.per_decade);
    const auto scan2 = detail::scan_weighted(t2, p, kind, tol);
    out.extended_constant = std::max(scan2.sup, out.asymptotic_floor);
    if (out.extended_constant > 1.01 * out.constant)
        throw bound_violation_error(
            detail::concat("weighted defect keeps growing: sup ", out.constant, " on [", grid.t_lo,
                           ", ", grid.t_hi, "] but ", out.extended_constant, " with the end doubled"),
            out.constant, out.extended_constant);
    return out;
}

} // namespace mlkit

#pragma once

// Verification harness: every identity of the toolkit evaluated over a
// parameter grid, aggregated into one CheckReport per identity. Per-point
// exceptions are recorded (as infinite defects) rather than aborting a sweep.

#include "mlkit/asymptotics.hpp"
#include "mlkit/closedforms.hpp"
#include "mlkit/core.hpp"
#include "mlkit/evaluate.hpp"
#include "mlkit/kernel.hpp"
#include "mlkit/mp_series.hpp"
#include "mlkit/representation.hpp"
#include "mlkit/series.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace mlkit {

inline constexpr std::uint64_t default_seed = 20240917;

struct CheckPoint {
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double beta = std::numeric_limits<double>::quiet_NaN();
    Complex lambda{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
    double t = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::pair<std::string, double>> extra; // coordinates beyond (alpha, beta, lambda, t)

    MLParams params() const { return {alpha, beta, lambda}; }
};

struct FilteredPoint {
    CheckPoint point;
    std::string reason;
};

struct ParameterGrid {
    std::vector<CheckPoint> points;
    std::vector<FilteredPoint> filtered;
};

struct PointResult {
    CheckPoint point;
    Complex computed;
    Complex reference;
    double abs_defect = 0.0;
    double rel_defect = 0.0;
    std::string error; // non-empty when the point threw
};

struct CheckReport {
    std::string check_name;
    std::size_t grid_points = 0;
    double max_rel_defect = 0.0;
    double max_abs_defect = 0.0;
    CheckPoint worst_case;
    bool passed = false;
    double threshold = 0.0;
    std::optional<std::uint64_t> seed;
    std::vector<FilteredPoint> skipped;
    std::vector<PointResult> rows;
    std::vector<std::pair<std::string, double>> notes;

    std::size_t failures() const
    {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [](const PointResult& r) { return !r.error.empty(); }));
    }

    double note(const std::string& key) const
    {
        for (const auto& [k, v] : notes)
            if (k == key)
                return v;
        return std::numeric_limits<double>::quiet_NaN();
    }
};

struct CheckOptions {
    std::optional<double> threshold;
    std::uint64_t seed = default_seed;
    unsigned threads = 0; // 0: MLKIT_THREADS, then hardware concurrency
    std::optional<ParameterGrid> grid;
    double tol = default_quad_tol;
};

/// alpha in {0.3,0.5,0.7,0.9}; beta in {a/2, a, 1, 1+a/2, 1+0.9a};
/// lambda in {1, 3, -1, -5, r e^{+-0.8 i pi a} for r in {0.5, 2}};
/// t in {0.01, 0.1, 1, 5, 20}.
inline ParameterGrid default_grid()
{
    ParameterGrid g;
    for (double a : {0.3, 0.5, 0.7, 0.9}) {
        const double theta = 0.8 * pi * a;
        const std::vector<Complex> lambdas = {1.0, 3.0, -1.0, -5.0,
                                              std::polar(0.5, theta), std::polar(0.5, -theta),
                                              std::polar(2.0, theta), std::polar(2.0, -theta)};
        for (double b : {a / 2.0, a, 1.0, 1.0 + a / 2.0, 1.0 + 0.9 * a})
            for (const Complex& lam : lambdas)
                for (double t : {0.01, 0.1, 1.0, 5.0, 20.0}) {
                    CheckPoint pt;
                    pt.alpha = a;
                    pt.beta = b;
                    pt.lambda = lam;
                    pt.t = t;
                    try {
                        const MLParams p = pt.params();
                        validate(p);
                        if (p.lambda == Complex{})
                            g.filtered.push_back({pt, "lambda = 0 is out of scope"});
                        else if (std::fabs(pole_margin(p)) < min_pole_margin)
                            g.filtered.push_back({pt, detail::concat("pole margin ", pole_margin(p), " < ", min_pole_margin)});
                        else
                            g.points.push_back(pt);
                    } catch (const domain_error& e) {
                        g.filtered.push_back({pt, e.what()});
                    }
                }
    }
    return g;
}

inline const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = {
        "series_vs_repr", "t_zero_limit", "m1_routes",     "m2_routes",        "theorem34_collapse",
        "trig_identity",  "mellin_sine",  "laplace_pair",  "density_relation", "asymptotic_order",
        "bound_24",       "bound_25",     "J_decay"};
    return names;
}

inline bool is_check_name(const std::string& name)
{
    const auto& n = check_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

/// Resolved worker count: explicit value, else MLKIT_THREADS (0 = auto),
/// else the hardware concurrency.
inline unsigned resolve_threads(unsigned requested)
{
    unsigned n = requested;
    if (n == 0) {
        if (const char* env = std::getenv("MLKIT_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v > 0)
                n = static_cast<unsigned>(v);
        }
    }
    if (n == 0)
        n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

/// t^{b-1} E_{a,b}(lambda t^a) from the series in extended precision.
inline Complex series_oracle(double t, const MLParams& p)
{
#if defined(MLKIT_HAVE_MPFR)
    if (t > 0.0)
        return mp_scaled_series(t, p).value;
    return scaled_series(t, p).value;
#elif defined(MLKIT_HAVE_QUADMATH)
    const SeriesOutcome s = scaled_series<__float128>(t, p, 1e-20);
    if (s.rounding_bound > 1e-10 * std::max(1.0, std::abs(s.value)))
        throw accuracy_regime_error(detail::concat("series oracle rounding bound ", s.rounding_bound));
    return s.value;
#else
    const SeriesOutcome s = scaled_series(t, p, 1e-16);
    if (s.rounding_bound > 1e-10 * std::max(1.0, std::abs(s.value)))
        throw accuracy_regime_error(detail::concat("series oracle rounding bound ", s.rounding_bound));
    return s.value;
#endif
}

class unknown_check_error : public error {
public:
    using error::error;
};

namespace detail {

inline constexpr double infinite_defect = std::numeric_limits<double>::infinity();

using PointTask = std::function<PointResult()>;

/// Runs the tasks on up to `threads` workers; results keep task order.
inline std::vector<PointResult> run_tasks(const std::vector<PointTask>& tasks,
                                          const std::vector<CheckPoint>& points, unsigned threads)
{
    std::vector<PointResult> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                out[i] = tasks[i]();
                out[i].point = points[i];
            } catch (const std::exception& e) {
                out[i] = PointResult{};
                out[i].point = points[i];
                out[i].error = e.what();
                out[i].abs_defect = infinite_defect;
                out[i].rel_defect = infinite_defect;
            }
        }
    };
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    if (n <= 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return out;
}

inline void finalize(CheckReport& r)
{
    r.grid_points = r.rows.size();
    r.max_abs_defect = 0.0;
    r.max_rel_defect = 0.0;
    bool have_worst = false;
    for (const auto& row : r.rows) {
        r.max_abs_defect = std::max(r.max_abs_defect, row.abs_defect);
        if (!have_worst || row.rel_defect > r.max_rel_defect) {
            r.max_rel_defect = std::max(r.max_rel_defect, row.rel_defect);
            r.worst_case = row.point;
            have_worst = true;
        }
    }
    r.passed = !r.rows.empty() && (r.max_rel_defect <= r.threshold || r.max_abs_defect <= r.threshold);
}

inline PointResult compare(Complex computed, Complex reference, double scale)
{
    PointResult pr;
    pr.computed = computed;
    pr.reference = reference;
    pr.abs_defect = std::abs(computed - reference);
    pr.rel_defect = pr.abs_defect / scale;
    if (!std::isfinite(pr.abs_defect)) {
        pr.abs_defect = infinite_defect;
        pr.rel_defect = infinite_defect;
    }
    return pr;
}

inline bool same_params(const CheckPoint& a, const CheckPoint& b)
{
    return a.alpha == b.alpha && a.beta == b.beta && a.lambda == b.lambda;
}

/// Distinct (alpha, beta, lambda) of a grid, in first-seen order.
inline std::vector<CheckPoint> distinct_params(const ParameterGrid& g)
{
    std::vector<CheckPoint> out;
    for (const auto& pt : g.points) {
        if (std::none_of(out.begin(), out.end(), [&](const CheckPoint& q) { return same_params(q, pt); })) {
            CheckPoint c = pt;
            c.t = std::numeric_limits<double>::quiet_NaN();
            out.push_back(c);
        }
    }
    return out;
}

/// Distinct (alpha, lambda) pairs.
inline std::vector<CheckPoint> distinct_alpha_lambda(const ParameterGrid& g)
{
    std::vector<CheckPoint> out;
    for (const auto& pt : g.points) {
        if (std::none_of(out.begin(), out.end(), [&](const CheckPoint& q) {
                return q.alpha == pt.alpha && q.lambda == pt.lambda;
            })) {
            CheckPoint c = pt;
            c.beta = std::numeric_limits<double>::quiet_NaN();
            c.t = std::numeric_limits<double>::quiet_NaN();
            out.push_back(c);
        }
    }
    return out;
}

inline std::vector<double> distinct_t(const ParameterGrid& g)
{
    std::vector<double> ts;
    for (const auto& pt : g.points)
        if (std::find(ts.begin(), ts.end(), pt.t) == ts.end())
            ts.push_back(pt.t);
    std::sort(ts.begin(), ts.end());
    return ts;
}

/// log |residue| without forming it; -inf when there is no residue.
inline double log_residue_magnitude(double t, const MLParams& p)
{
    if (classify_region(p) != Region::ResiduePresent)
        return -std::numeric_limits<double>::infinity();
    const Complex root = principal_power(p.lambda, 1.0 / p.alpha);
    return root.real() * t + ((1.0 - p.beta) / p.alpha) * std::log(std::abs(p.lambda)) - std::log(p.alpha);
}

inline bool in_wedge(const CheckPoint& c) { return classify_region(c.params()) == Region::ResiduePresent; }

struct Sweep {
    std::vector<CheckPoint> points;
    std::vector<PointTask> tasks;
    void add(const CheckPoint& pt, PointTask task)
    {
        points.push_back(pt);
        tasks.push_back(std::move(task));
    }
};

inline CheckReport make_report(const std::string& name, double default_threshold, const CheckOptions& opt)
{
    CheckReport r;
    r.check_name = name;
    r.threshold = opt.threshold.value_or(default_threshold);
    return r;
}

inline void run_sweep(CheckReport& r, Sweep& s, const CheckOptions& opt)
{
    r.rows = run_tasks(s.tasks, s.points, resolve_threads(opt.threads));
    finalize(r);
}

// ---------------------------------------------------------------------------
// Individual checks

inline CheckReport check_series_vs_repr(const ParameterGrid& g, const CheckOptions& opt)
{
    CheckReport r = make_report("series_vs_repr", 1e-7, opt);
    r.skipped = g.filtered;
    Sweep s;
    for (const auto& pt : g.points) {
        const MLParams p = pt.params();
        const double zmod = std::abs(p.lambda) * std::pow(pt.t, p.alpha);
        if (zmod > series_z_max) {
            r.skipped.push_back({pt, concat("|lambda t^alpha| = ", zmod, " > ", series_z_max)});
            continue;
        }
        const double log_res = log_residue_magnitude(pt.t, p);
        if (log_res > 700.0) {
            r.skipped.push_back({pt, concat("value overflows double (log|residue| = ", log_res, ")")});
            continue;
        }
        const double tol = opt.tol;
        s.add(pt, [p, t = pt.t, tol] {
            const Complex ref = series_oracle(t, p);
            const EvalOutcome e = eval_repr(t, p, tol);
            return compare(e.value, ref, std::max(1.0, std::abs(ref)));
        });
    }
    run_sweep(r, s, opt);
    return r;
}

inline CheckReport check_t_zero_limit(const ParameterGrid& g, const CheckOptions& opt)
{
    CheckReport r = make_report("t_zero_limit", 1e-8, opt);
    constexpr double path_threshold = 1e-6;
    Sweep s;
    for (const auto& c : distinct_params(g)) {
        const MLParams p = c.params();
        const Region region = classify_region(p);
        if (!(p.beta >= 1.0)) {
            r.skipped.push_back({c, "beta < 1: no finite t = 0 limit"});
            continue;
        }
        if (region != Region::ResiduePresent && region != Region::ResidueAbsentNegativeReal) {
            r.skipped.push_back({c, concat("region ", to_string(region), " has no t = 0 representation")});
            continue;
        }
        CheckPoint pt = c;
        pt.t = 0.0;
        s.add(pt, [p] {
            const EvalOutcome z = eval_at_zero(p, 1e-12);
            const Complex limit = p.beta == 1.0 ? Complex{1.0} : Complex{};
            PointResult pr = compare(z.value, limit, 1.0);
            // the representation must track the function all the way down
            double worst_path = 0.0;
            for (int k = 2; k <= 6; ++k) {
                const double t = std::pow(10.0, -k);
                const Complex v = eval_repr(t, p, 1e-12).value;
                worst_path = std::max(worst_path, std::abs(v - series_oracle(t, p)));
            }
            if (worst_path > path_threshold)
                throw error(concat("eval_repr departs from the series by ", worst_path, " on t in [1e-6, 1e-2]"));
            pr.reference = limit;
            pr.computed = z.value;
            return pr;
        });
    }
    run_sweep(r, s, opt);
    r.notes.emplace_back("path_threshold", path_threshold);
    return r;
}

inline CheckReport check_theorem34(const ParameterGrid& g, const CheckOptions& opt)
{
    CheckReport r = make_report("theorem34_collapse", 1e-8, opt);
    Sweep s;
    double collapse = 0.0;
    for (const auto& c : distinct_params(g)) {
        const MLParams p = c.params();
        if (p.beta == p.alpha) {
            s.add(c, [p] {
                bool closed = false, quad = false;
                try {
                    (void)theorem34_value(p);
                } catch (const divergence_error&) {
                    closed = true;
                }
                try {
                    (void)eval_at_zero(p);
                } catch (const divergence_error&) {
                    quad = true;
                }
                if (!closed || !quad)
                    throw error("beta = alpha did not raise the divergence");
                return compare(0.0, 0.0, 1.0);
            });
            continue;
        }
        if (!(p.beta >= 1.0)) {
            r.skipped.push_back({c, "beta outside [1, 1+alpha) and != alpha"});
            continue;
        }
        if (!in_wedge(c)) {
            r.skipped.push_back({c, "closed forms need |arg lambda| < pi alpha"});
            continue;
        }
        collapse = std::max(collapse, std::abs(theorem34_value(p) - theorem34_expected(p)));
        s.add(c, [p] {
            const EvalOutcome z = eval_at_zero(p, 1e-12);
            const Complex expected = theorem34_expected(p);
            return compare(z.integral, expected, std::abs(expected));
        });
    }
    run_sweep(r, s, opt);
    r.notes.emplace_back("max_collapse_identity_defect", collapse);
    return r;
}

inline bool mellin_licensed(const MLParams& p) { return p.alpha > 0.5 && p.lambda.real() > 0.0; }

inline CheckReport check_moment_routes(const ParameterGrid& g, const CheckOptions& opt, bool first)
{
    CheckReport r = make_report(first ? "m1_routes" : "m2_routes", 1e-8, opt);
    constexpr double route_threshold = 1e-12;
    double inside = 0.0, outside = 0.0;
    Sweep s;
    for (const auto& c : distinct_params(g)) {
        const MLParams p = c.params();
        const bool band = p.beta > 1.0 && p.beta < 1.0 + p.alpha;
        if (!(band || (!first && p.beta == 1.0))) {
            r.skipped.push_back({c, first ? "M1 closed form needs beta in (1, 1+alpha)"
                                          : "M2 closed form needs beta = 1 or beta in (1, 1+alpha)"});
            continue;
        }
        if (!in_wedge(c)) {
            r.skipped.push_back({c, "closed forms need |arg lambda| < pi alpha"});
            continue;
        }
        const Complex contour = first ? m1_closed(p) : m2_closed(p);
        const Complex mellin = first ? m1_closed(p, MomentRoute::Mellin) : m2_closed(p, MomentRoute::Mellin);
        const double route = std::abs(contour - mellin) / std::abs(contour);
        const bool licensed = mellin_licensed(p);
        if (licensed)
            inside = std::max(inside, route);
        else
            outside = std::max(outside, route);
        s.add(c, [p, first, contour, route, licensed] {
            if (licensed && route > route_threshold)
                throw error(concat("contour and Mellin routes differ by ", route));
            const auto q = first ? m1_quadrature(p, 1e-12) : m2_quadrature(p, 1e-12);
            return compare(contour, q.value, std::abs(q.value));
        });
    }
    run_sweep(r, s, opt);
    r.notes.emplace_back("route_threshold", route_threshold);
    r.notes.emplace_back("max_route_defect_mellin_range", inside);
    r.notes.emplace_back("max_route_defect_outside", outside);
    return r;
}

inline CheckReport check_trig_identity(const CheckOptions& opt)
{
    CheckReport r = make_report("trig_identity", 1e-13, opt);
    r.seed = opt.seed;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Sweep s;
    for (int i = 0; i < 1000; ++i) {
        CheckPoint c;
        c.alpha = 0.001 + 0.998 * u(rng);
        c.beta = (1.0 + c.alpha) * (0.001 + 0.998 * u(rng));
        s.add(c, [a = c.alpha, b = c.beta] {
            const double d = trig_identity_defect(a, b);
            PointResult pr;
            pr.computed = d;
            pr.abs_defect = d;
            pr.rel_defect = d;
            return pr;
        });
    }
    run_sweep(r, s, opt);
    return r;
}

inline CheckReport check_mellin_sine(const CheckOptions& opt)
{
    CheckReport r = make_report("mellin_sine", 1e-8, opt);
    r.seed = opt.seed;
    std::mt19937_64 rng(opt.seed + 1);
    std::uniform_real_distribution<double> us(0.2, 3.0), uphi(-0.4 * pi, 0.4 * pi);
    Sweep s;
    for (int i = 0; i < 20; ++i) {
        CheckPoint c;
        const double sv = us(rng);
        const double phi = uphi(rng);
        c.extra = {{"s", sv}, {"phi", phi}};
        s.add(c, [sv, phi] {
            const auto q = mellin_sine_integral(sv, phi);
            const double exact = real_gamma(sv) * std::sin(phi * sv);
            return compare(q.value, exact, std::max(1.0, std::fabs(exact)));
        });
    }
    run_sweep(r, s, opt);
    return r;
}

/// lambda with |lambda| in [0.5, 3]: positive, negative or complex with
/// |pole margin| >= 1e-3.
inline Complex random_lambda(std::mt19937_64& rng, double alpha)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        const double mag = 0.5 + 2.5 * u(rng);
        const double kind = u(rng);
        Complex lam = kind < 0.25 ? Complex{mag} : kind < 0.5 ? Complex{-mag} : std::polar(mag, pi * (2.0 * u(rng) - 1.0));
        if (std::fabs(pole_margin({alpha, 1.0, lam})) >= min_pole_margin)
            return lam;
    }
}

inline CheckReport check_laplace_pair(const CheckOptions& opt)
{
    CheckReport r = make_report("laplace_pair", 1e-8, opt);
    r.seed = opt.seed;
    std::mt19937_64 rng(opt.seed + 2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Sweep s;
    for (int i = 0; i < 20; ++i) {
        CheckPoint c;
        c.alpha = 0.3 + 0.6 * u(rng);
        c.beta = 0.1 + (c.alpha + 0.85) * u(rng);
        c.lambda = random_lambda(rng, c.alpha);
        const double radius = std::pow(std::abs(c.lambda), 1.0 / c.alpha);
        const double sv = radius * (1.5 + 1.5 * u(rng));
        c.extra = {{"s", sv}};
        const double tol = opt.tol;
        s.add(c, [p = c.params(), sv, tol] {
            const double horizon = laplace_horizon(sv, p, tol);
            const auto q = laplace_identity_integral(sv, p, horizon, tol);
            const Complex exact = laplace_transform_exact(sv, p);
            return compare(q.value, exact, std::max(1.0, std::abs(exact)));
        });
    }
    run_sweep(r, s, opt);
    return r;
}

inline CheckReport check_density_relation(const CheckOptions& opt)
{
    CheckReport r = make_report("density_relation", 1e-12, opt);
    r.seed = opt.seed;
    std::mt19937_64 rng(opt.seed + 3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Sweep s;
    for (int i = 0; i < 200; ++i) {
        CheckPoint c;
        c.alpha = 0.05 + 0.9 * u(rng);
        c.beta = c.alpha;
        for (;;) {
            const double mag = std::pow(10.0, 2.0 * u(rng) - 1.0);
            c.lambda = std::polar(mag, pi * (2.0 * u(rng) - 1.0));
            if (std::fabs(pole_margin(c.params())) >= min_pole_margin)
                break;
        }
        const double v = std::pow(10.0, 6.0 * u(rng) - 3.0);
        c.extra = {{"v", v}};
        s.add(c, [p = c.params(), v] {
            MLParams p1 = p;
            p1.beta = 1.0;
            const Complex fa = density(v, p);
            const Complex rhs = -v * density(v, p1) / p.lambda;
            return compare(fa, rhs, std::max(1.0, std::abs(fa)));
        });
    }
    run_sweep(r, s, opt);
    return r;
}

inline CheckReport check_asymptotic_order(const CheckOptions& opt)
{
    CheckReport r = make_report("asymptotic_order", 3.0, opt);
    constexpr int order = 3;
    Sweep s;
    for (double a : {0.5, 0.7})
        for (double lam : {-1.0, 1.0}) {
            CheckPoint c;
            c.alpha = a;
            c.beta = 1.0;
            c.lambda = lam;
            s.add(c, [p = c.params()] {
                double prev = 0.0, worst = 1.0;
                for (double t = 10.0; t <= 640.0; t *= 2.0) {
                    const Complex truth = eval_repr(t, p, 1e-13).integral;
                    const double scaled =
                        std::abs(truth - expand_tail(t, p, order)) * std::pow(t, (order + 1) * p.alpha);
                    if (prev > 0.0)
                        worst = std::max(worst, std::max(scaled / prev, prev / scaled));
                    prev = scaled;
                }
                PointResult pr;
                pr.computed = worst;
                pr.abs_defect = worst;
                pr.rel_defect = worst;
                return pr;
            });
        }
    run_sweep(r, s, opt);
    return r;
}

inline CheckReport check_bound(const ParameterGrid& g, const CheckOptions& opt, BoundKind kind)
{
    CheckReport r = make_report(kind == BoundKind::Eq24 ? "bound_24" : "bound_25", 0.01, opt);
    Sweep s;
    for (const auto& c : distinct_alpha_lambda(g)) {
        const MLParams p{c.alpha, 1.0, c.lambda};
        const Region region = classify_region(p);
        if (region != Region::ResiduePresent && region != Region::ResidueAbsentNegativeReal) {
            r.skipped.push_back({c, concat("expansion needs |arg lambda| < pi alpha or lambda < 0; region ",
                                           to_string(region))});
            continue;
        }
        CheckPoint pt = c;
        pt.beta = kind == BoundKind::Eq24 ? 1.0 : c.alpha;
        s.add(pt, [a = c.alpha, lam = c.lambda, kind] {
            const BoundEstimate b = estimate_bound(a, lam, kind);
            if (b.constant < b.asymptotic_floor)
                throw error(concat("constant ", b.constant, " below the large-t limit ", b.asymptotic_floor));
            PointResult pr = compare(b.extended_constant, b.constant, b.constant);
            return pr;
        });
    }
    run_sweep(r, s, opt);
    return r;
}

inline CheckReport check_J_decay(const ParameterGrid& g, const CheckOptions& opt)
{
    CheckReport r = make_report("J_decay", 1e-3, opt);
    std::vector<double> ts;
    for (double t : distinct_t(g))
        if (t >= 1.0)
            ts.push_back(t);
    Sweep s;
    for (const auto& c : distinct_alpha_lambda(g)) {
        const MLParams p{c.alpha, 1.0, c.lambda};
        if (classify_region(p) != Region::ResiduePresent) {
            r.skipped.push_back({c, "J_lambda needs |arg lambda| < pi alpha"});
            continue;
        }
        CheckPoint pt = c;
        s.add(pt, [p, ts] {
            const Complex j0 = eval_J(0.0, p).value;
            if (!std::isfinite(std::abs(j0)))
                throw error("J(0) is not finite");
            if (p.alpha == 0.5 && p.lambda == Complex{1.0} && std::abs(j0 - pi) > 1e-8)
                throw error(concat("J(0) = ", j0.real(), " differs from pi"));
            for (double t : ts) {
                const double j1 = std::abs(eval_J(t, p).value);
                const double j2 = std::abs(eval_J(2.0 * t, p).value);
                if (!(j2 < j1))
                    throw error(concat("|J(", 2.0 * t, ")| = ", j2, " is not below |J(", t, ")| = ", j1));
            }
            const Complex j100 = eval_J(100.0, p).value;
            const Complex j1 = eval_J(1.0, p).value;
            PointResult pr;
            pr.computed = j100;
            pr.reference = j1;
            pr.abs_defect = std::abs(j100) / std::abs(j1);
            pr.rel_defect = pr.abs_defect;
            return pr;
        });
    }
    run_sweep(r, s, opt);
    return r;
}

} // namespace detail

inline CheckReport run_check(const std::string& name, const CheckOptions& opt = {})
{
    const ParameterGrid grid = opt.grid ? *opt.grid : default_grid();
    if (name == "series_vs_repr") return detail::check_series_vs_repr(grid, opt);
    if (name == "t_zero_limit") return detail::check_t_zero_limit(grid, opt);
    if (name == "m1_routes") return detail::check_moment_routes(grid, opt, true);
    if (name == "m2_routes") return detail::check_moment_routes(grid, opt, false);
    if (name == "theorem34_collapse") return detail::check_theorem34(grid, opt);
    if (name == "trig_identity") return detail::check_trig_identity(opt);
    if (name == "mellin_sine") return detail::check_mellin_sine(opt);
    if (name == "laplace_pair") return detail::check_laplace_pair(opt);
    if (name == "density_relation") return detail::check_density_relation(opt);
    if (name == "asymptotic_order") return detail::check_asymptotic_order(opt);
    if (name == "bound_24") return detail::check_bound(grid, opt, BoundKind::Eq24);
    if (name == "bound_25") return detail::check_bound(grid, opt, BoundKind::Eq25);
    if (name == "J_decay") return detail::check_J_decay(grid, opt);
    std::string known;
    for (const auto& n : check_names())
        known += (known.empty() ? "" : ", ") + n;
    throw unknown_check_error("unknown check '" + name + "'; valid names: " + known);
}

} // namespace mlkit

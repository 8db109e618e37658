// Acceptance suite: one line per criterion, exit status 0 iff every line passes.

#include "mlkit/mlkit.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

namespace {

int failed = 0;

void line(int id, bool ok, const std::string& title, const std::string& detail)
{
    std::printf("%s  C%-2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failed;
}

std::string g(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string summary(const mlkit::CheckReport& r)
{
    return r.check_name + " points=" + std::to_string(r.grid_points) + " failures=" +
           std::to_string(r.failures()) + " max_rel=" + g(r.max_rel_defect) + " max_abs=" +
           g(r.max_abs_defect) + " threshold=" + g(r.threshold);
}

std::string first_failure(const mlkit::CheckReport& r)
{
    for (const auto& row : r.rows)
        if (!row.error.empty())
            return " first failure: " + row.error;
    return {};
}

void criterion_series(const mlkit::CheckOptions& opt)
{
    const auto r = mlkit::run_check("series_vs_repr", opt);
    line(1, r.passed, "series vs representation", summary(r) + first_failure(r));
}

void criterion_t_zero(const mlkit::CheckOptions& opt)
{
    // the check verifies the t = 0 sums and that eval_repr tracks the series
    // on [1e-6, 1e-2]; the literal clause |eval_repr(1e-6) - limit| <= 1e-6 is
    // judged here on top of it
    const auto r = mlkit::run_check("t_zero_limit", opt);
    double literal = 0.0;
    std::string where;
    for (const auto& row : r.rows) {
        if (!row.error.empty())
            continue;
        const mlkit::MLParams p = row.point.params();
        const double gap = std::abs(mlkit::eval_repr(1e-6, p, 1e-12).value - row.reference);
        if (gap > literal) {
            literal = gap;
            where = "alpha=" + g(p.alpha) + " beta=" + g(p.beta) + " lambda=" + g(p.lambda.real()) +
                    (p.lambda.imag() != 0.0 ? "+" + g(p.lambda.imag()) + "i" : "");
        }
    }
    line(2, r.passed && literal <= 1e-6, "t = 0 validity",
         summary(r) + "; max |repr(1e-6) - limit|=" + g(literal) + " at " + where + " (<= 1e-6)" +
             first_failure(r));
}

void criterion_collapse(const mlkit::CheckOptions& opt)
{
    const auto r = mlkit::run_check("theorem34_collapse", opt);
    line(3, r.passed, "density integral closed values", summary(r) + first_failure(r));
}

void criterion_moments(const mlkit::CheckOptions& opt)
{
    const auto m1 = mlkit::run_check("m1_routes", opt);
    const auto m2 = mlkit::run_check("m2_routes", opt);
    const double route = std::max(m1.note("max_route_defect_mellin_range"), m2.note("max_route_defect_mellin_range"));
    const bool ok = m1.passed && m2.passed && route <= 1e-12;
    line(4, ok, "moment triple equivalence",
         summary(m1) + "; " + summary(m2) + "; contour vs Mellin=" + g(route) + " (<= 1e-12)" +
             first_failure(m1) + first_failure(m2));
}

void criterion_seeded(int id, const char* name, const char* title, const mlkit::CheckOptions& opt)
{
    const auto r = mlkit::run_check(name, opt);
    line(id, r.passed, title, summary(r) + " seed=" + std::to_string(r.seed.value_or(0)) + first_failure(r));
}

void criterion_erfc()
{
    double worst = 0.0;
    std::string where;
    for (double t : {0.25, 1.0, 4.0, 16.0})
        for (double sign : {1.0, -1.0}) {
            // E_{1/2}(s sqrt t) = e^t erfc(-s sqrt t)
            const double exact = std::exp(t) * std::erfc(-sign * std::sqrt(t));
            const auto v = mlkit::eval_repr(t, {0.5, 1.0, sign}, 1e-12).value;
            const double rel = std::abs(v - exact) / exact;
            if (rel >= worst) {
                worst = rel;
                where = "t=" + g(t) + " lambda=" + g(sign);
            }
        }
    line(8, worst <= 1e-9, "erfc oracle", "max_rel=" + g(worst) + " at " + where + " threshold=1e-09");
}

void criterion_bounds(const mlkit::CheckOptions& opt)
{
    const auto b24 = mlkit::run_check("bound_24", opt);
    const auto b25 = mlkit::run_check("bound_25", opt);
    bool floor_ok = true;
    bool finite_ok = true;
    for (const auto* r : {&b24, &b25})
        for (const auto& row : r->rows)
            if (!std::isfinite(row.reference.real()))
                finite_ok = false;
    for (const auto& row : b24.rows) {
        if (!row.error.empty())
            continue;
        const mlkit::MLParams p{row.point.alpha, 1.0, row.point.lambda};
        const double floor = std::abs(mlkit::watson_coeff_a(1, p)) * std::tgamma(p.alpha);
        if (row.reference.real() < floor * (1.0 - 1e-12))
            floor_ok = false;
    }
    line(10, b24.passed && b25.passed && floor_ok && finite_ok, "uniform bounds",
         summary(b24) + "; " + summary(b25) + "; constant >= |a1 Gamma(alpha)|: " + (floor_ok ? "yes" : "no") +
             first_failure(b24) + first_failure(b25));
}

void criterion_J(const mlkit::CheckOptions& opt)
{
    const double j0 = mlkit::eval_J(0.0, {0.5, 1.0, 1.0}, 1e-12).value.real();
    const auto r = mlkit::run_check("J_decay", opt);
    const bool pi_ok = std::fabs(j0 - mlkit::pi) <= 1e-8;
    line(11, r.passed && pi_ok, "J finite at 0 and decaying",
         "J(0)=" + g(j0) + " |J(0)-pi|=" + g(std::fabs(j0 - mlkit::pi)) + "; monotone on t >= 1: " +
             (r.failures() == 0 ? "yes" : "no") + "; max |J(100)|/|J(1)|=" + g(r.max_rel_defect) +
             " (<= 1e-3); " + summary(r) + first_failure(r));
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    mlkit::CheckOptions opt;

    criterion_series(opt);
    criterion_t_zero(opt);
    criterion_collapse(opt);
    criterion_moments(opt);
    criterion_seeded(5, "trig_identity", "trigonometric identity", opt);
    criterion_seeded(6, "laplace_pair", "Laplace pair", opt);
    criterion_seeded(7, "mellin_sine", "Mellin sine identity", opt);
    criterion_erfc();
    {
        const auto r = mlkit::run_check("asymptotic_order", opt);
        line(9, r.passed, "asymptotic order K=3", summary(r) + " (max doubling factor)" + first_failure(r));
    }
    criterion_bounds(opt);
    criterion_J(opt);
    criterion_seeded(12, "density_relation", "density relation", opt);

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 12 criteria failed (%.1f s)\n", failed, secs);
    return failed == 0 ? 0 : 1;
}

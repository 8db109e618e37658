// mlkit: evaluate t^{b-1} E_{a,b}(lambda t^a), tabulate it, run the
// verification suite and estimate the uniform bound constants.
//
// Exit status: 0 success, 1 domain or numerical failure, 2 usage error.

#include "mlkit/evaluate.hpp"
#include "mlkit/report_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    double tol = mlkit::default_quad_tol;
    std::string format = "plain";
    std::string method = "auto";
    std::uint64_t seed = mlkit::default_seed;
};

struct ParamFlags {
    double alpha = 0.5;
    double beta = 1.0;
    std::optional<double> lambda;
    std::optional<double> lambda_re;
    std::optional<double> lambda_im;

    mlkit::Complex value() const
    {
        if (lambda_re || lambda_im)
            return {lambda_re.value_or(0.0), lambda_im.value_or(0.0)};
        return {lambda.value_or(-1.0), 0.0};
    }
};

std::string num(double x, int digits)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

int digits_for(const std::string& format) { return format == "plain" ? 10 : 17; }

/// Open interval (1e-15, 1e-2).
const CLI::Validator tolerance_range(
    [](std::string& s) -> std::string {
        double v = 0.0;
        std::istringstream is(s);
        if (!(is >> v))
            return "tolerance must be a number, got " + s;
        if (!(v > 1e-15 && v < 1e-2))
            return "tolerance must lie in (1e-15, 1e-2), got " + s;
        return {};
    },
    "(1e-15, 1e-2)");

void add_common(CLI::App* cmd, Common& c, const std::string& default_format, bool with_method)
{
    c.format = default_format;
    cmd->add_option("--tol", c.tol, "quadrature tolerance")->check(tolerance_range)->capture_default_str();
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "plain"}))
        ->capture_default_str();
    if (with_method)
        cmd->add_option("--method", c.method, "evaluation method")
            ->check(CLI::IsMember({"auto", "series", "repr", "asympt"}))
            ->capture_default_str();
    cmd->add_option("--seed", c.seed, "seed for randomised checks")->capture_default_str();
}

void add_lambda(CLI::App* cmd, ParamFlags& p)
{
    auto* l = cmd->add_option("--lambda", p.lambda, "real lambda (default -1)");
    auto* re = cmd->add_option("--lambda-re", p.lambda_re, "real part of complex lambda");
    auto* im = cmd->add_option("--lambda-im", p.lambda_im, "imaginary part of complex lambda");
    l->excludes(re)->excludes(im);
}

void add_params(CLI::App* cmd, ParamFlags& p)
{
    cmd->add_option("--alpha", p.alpha, "alpha in (0,1)")->required();
    cmd->add_option("--beta", p.beta, "beta in (0, 1+alpha)")->capture_default_str();
    add_lambda(cmd, p);
}

struct TSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    bool log = false;
};

TSpec parse_range(const std::string& text, bool log)
{
    TSpec r;
    r.log = log;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> r.start >> c1 >> r.stop >> c2 >> r.count) || c1 != ':' || c2 != ':' || !is.eof())
        throw usage_error("range must look like start:stop:count, got '" + text + "'");
    if (!(r.start < r.stop))
        throw usage_error("range needs start < stop, got '" + text + "'");
    if (r.count < 2)
        throw usage_error("range needs count >= 2, got '" + text + "'");
    if (log && !(r.start > 0.0))
        throw usage_error("log range needs start > 0, got '" + text + "'");
    if (!log && r.start < 0.0)
        throw usage_error("t must be non-negative, got '" + text + "'");
    return r;
}

std::vector<double> expand(const TSpec& r)
{
    std::vector<double> t(static_cast<std::size_t>(r.count));
    for (int i = 0; i < r.count; ++i) {
        const double f = static_cast<double>(i) / (r.count - 1);
        t[static_cast<std::size_t>(i)] = r.log ? r.start * std::pow(r.stop / r.start, f)
                                               : r.start + (r.stop - r.start) * f;
    }
    t.back() = r.stop;
    return t;
}

const char* table_header = "alpha,beta,lambda_re,lambda_im,t,value_re,value_im,method,err_est";

struct Row {
    mlkit::MLParams p;
    double t;
    mlkit::EvalOutcome e;
};

std::string csv_row(const Row& r, int d)
{
    return num(r.p.alpha, d) + "," + num(r.p.beta, d) + "," + num(r.p.lambda.real(), d) + "," +
           num(r.p.lambda.imag(), d) + "," + num(r.t, d) + "," + num(r.e.value.real(), d) + "," +
           num(r.e.value.imag(), d) + "," + mlkit::to_string(r.e.method) + "," +
           num(r.e.error_estimate, d);
}

nlohmann::json json_row(const Row& r)
{
    return {{"alpha", r.p.alpha},
            {"beta", r.p.beta},
            {"lambda_re", r.p.lambda.real()},
            {"lambda_im", r.p.lambda.imag()},
            {"t", r.t},
            {"value_re", r.e.value.real()},
            {"value_im", r.e.value.imag()},
            {"method", mlkit::to_string(r.e.method)},
            {"region", mlkit::to_string(r.e.region)},
            {"err_est", r.e.error_estimate}};
}

int cmd_eval(const ParamFlags& pf, double t, const Common& c)
{
    const mlkit::MLParams p{pf.alpha, pf.beta, pf.value()};
    const Row row{p, t, mlkit::evaluate(t, p, mlkit::parse_mode(c.method), c.tol)};
    const int d = digits_for(c.format);
    if (c.format == "csv") {
        std::cout << table_header << '\n' << csv_row(row, d) << '\n';
    } else if (c.format == "json") {
        std::cout << json_row(row).dump() << '\n';
    } else {
        std::cout << "value_re        " << num(row.e.value.real(), d) << '\n'
                  << "value_im        " << num(row.e.value.imag(), d) << '\n'
                  << "method          " << mlkit::to_string(row.e.method) << '\n'
                  << "region          " << mlkit::to_string(row.e.region) << '\n'
                  << "error_estimate  " << num(row.e.error_estimate, d) << '\n';
    }
    return exit_ok;
}

int cmd_table(const ParamFlags& pf, const TSpec& spec, const Common& c)
{
    const mlkit::MLParams p{pf.alpha, pf.beta, pf.value()};
    const auto mode = mlkit::parse_mode(c.method);
    std::vector<Row> rows;
    for (double t : expand(spec))
        rows.push_back({p, t, mlkit::evaluate(t, p, mode, c.tol)});
    const int d = digits_for(c.format);
    if (c.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back(json_row(r));
        std::cout << arr.dump() << '\n';
    } else if (c.format == "csv") {
        std::cout << table_header << '\n';
        for (const auto& r : rows)
            std::cout << csv_row(r, d) << '\n';
    } else {
        for (const auto& r : rows)
            std::cout << num(r.t, d) << "  " << num(r.e.value.real(), d) << "  "
                      << num(r.e.value.imag(), d) << "  " << mlkit::to_string(r.e.method) << '\n';
    }
    return exit_ok;
}

int cmd_verify(std::vector<std::string> names, const Common& c)
{
    if (names.empty() || (names.size() == 1 && names[0] == "all"))
        names = mlkit::check_names();
    for (const auto& n : names) {
        if (!mlkit::is_check_name(n)) {
            std::string known;
            for (const auto& k : mlkit::check_names())
                known += "  " + k + "\n";
            throw usage_error("unknown check '" + n + "'; valid names:\n" + known + "  all");
        }
    }
    mlkit::CheckOptions opt;
    opt.seed = c.seed;
    opt.tol = c.tol;
    std::vector<mlkit::CheckReport> reports;
    for (const auto& n : names)
        reports.push_back(mlkit::run_check(n, opt));

    if (c.format == "csv") {
        mlkit::write_csv(std::cout, reports);
    } else if (c.format == "plain") {
        for (const auto& r : reports)
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.check_name << "  points=" << r.grid_points
                      << "  max_rel=" << num(r.max_rel_defect, 10) << "  max_abs=" << num(r.max_abs_defect, 10)
                      << "  threshold=" << num(r.threshold, 10) << '\n';
    } else {
        std::cout << mlkit::to_json(reports).dump(2) << '\n';
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    return ok ? exit_ok : exit_failure;
}

int cmd_bounds(const ParamFlags& pf, int eq, double t_min, double t_max, const Common& c)
{
    const auto kind = eq == 24 ? mlkit::BoundKind::Eq24 : mlkit::BoundKind::Eq25;
    mlkit::BoundGrid grid;
    grid.t_lo = t_min;
    grid.t_hi = t_max;
    const auto b = mlkit::estimate_bound(pf.alpha, pf.value(), kind, grid, std::min(c.tol, 1e-12));
    const int d = digits_for(c.format);
    if (c.format == "json") {
        nlohmann::json j = {{"alpha", pf.alpha},
                            {"lambda_re", pf.value().real()},
                            {"lambda_im", pf.value().imag()},
                            {"eq", eq},
                            {"constant", b.constant},
                            {"t_star", b.t_star},
                            {"grid_size", b.grid_size},
                            {"grid_sup", b.grid_sup},
                            {"grid_sup_at", b.grid_sup_at},
                            {"asymptotic_floor", b.asymptotic_floor},
                            {"extended_constant", b.extended_constant}};
        std::cout << j.dump() << '\n';
    } else if (c.format == "csv") {
        std::cout << "alpha,lambda_re,lambda_im,eq,constant,t_star,grid_size,grid_sup,grid_sup_at,"
                     "asymptotic_floor,extended_constant\n"
                  << num(pf.alpha, d) << ',' << num(pf.value().real(), d) << ','
                  << num(pf.value().imag(), d) << ',' << eq << ',' << num(b.constant, d) << ','
                  << num(b.t_star, d) << ',' << b.grid_size << ',' << num(b.grid_sup, d) << ','
                  << num(b.grid_sup_at, d) << ',' << num(b.asymptotic_floor, d) << ','
                  << num(b.extended_constant, d) << '\n';
    } else {
        std::cout << "constant          " << num(b.constant, d) << '\n'
                  << "t_star            " << num(b.t_star, d) << '\n'
                  << "grid_size         " << b.grid_size << '\n'
                  << "grid_sup          " << num(b.grid_sup, d) << " at t = " << num(b.grid_sup_at, d) << '\n'
                  << "asymptotic_floor  " << num(b.asymptotic_floor, d) << '\n'
                  << "extended_constant " << num(b.extended_constant, d) << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-parameter Mittag-Leffler function t^(beta-1) E_{alpha,beta}(lambda t^alpha)"};
    app.require_subcommand(1);

    Common eval_c, table_c, verify_c, bounds_c;
    ParamFlags eval_p, table_p, bounds_p;
    double t = 1.0;
    std::string t_log, t_lin;
    std::vector<std::string> names;
    int eq = 24;
    double t_min = 1e-2, t_max = 1e3;

    auto* eval = app.add_subcommand("eval", "evaluate at one t");
    add_params(eval, eval_p);
    eval->add_option("--t", t, "t >= 0")->required();
    add_common(eval, eval_c, "plain", true);

    auto* table = app.add_subcommand("table", "tabulate over a t range");
    add_params(table, table_p);
    auto* o_log = table->add_option("--t-log", t_log, "log-spaced start:stop:count");
    auto* o_lin = table->add_option("--t-lin", t_lin, "linear start:stop:count");
    o_log->excludes(o_lin);
    add_common(table, table_c, "csv", true);

    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("names", names, "check names or 'all'");
    add_common(verify, verify_c, "json", false);

    auto* bounds = app.add_subcommand("bounds", "estimate the uniform bound constant");
    bounds->add_option("--alpha", bounds_p.alpha, "alpha in (0,1)")->required();
    add_lambda(bounds, bounds_p);
    bounds->add_option("--eq", eq, "24 (E_alpha, weight t^alpha) or 25 (E_alpha,alpha, weight t^(alpha+1))")
        ->check(CLI::IsMember({24, 25}))
        ->capture_default_str();
    bounds->add_option("--t-min", t_min, "grid start")->capture_default_str();
    bounds->add_option("--t-max", t_max, "grid end")->capture_default_str();
    add_common(bounds, bounds_c, "plain", false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*eval)
            return cmd_eval(eval_p, t, eval_c);
        if (*table) {
            if (t_log.empty() == t_lin.empty())
                throw usage_error("table needs exactly one of --t-log or --t-lin");
            const TSpec spec = t_log.empty() ? parse_range(t_lin, false) : parse_range(t_log, true);
            return cmd_table(table_p, spec, table_c);
        }
        if (*verify)
            return cmd_verify(names, verify_c);
        if (*bounds)
            return cmd_bounds(bounds_p, eq, t_min, t_max, bounds_c);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const mlkit::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

#pragma once

// CheckReport serialisation: one JSON document for a list of reports, and a
// CSV with one row per evaluated grid point.

#include "mlkit/crosscheck.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace mlkit {

namespace detail {

/// %.17g, or empty for NaN.
inline std::string fmt17(double x)
{
    if (std::isnan(x))
        return {};
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline nlohmann::json point_json(const CheckPoint& p)
{
    nlohmann::json j = nlohmann::json::object();
    if (!std::isnan(p.alpha)) j["alpha"] = p.alpha;
    if (!std::isnan(p.beta)) j["beta"] = p.beta;
    if (!std::isnan(p.lambda.real())) {
        j["lambda_re"] = p.lambda.real();
        j["lambda_im"] = p.lambda.imag();
    }
    if (!std::isnan(p.t)) j["t"] = p.t;
    for (const auto& [k, v] : p.extra)
        j[k] = v;
    return j;
}

} // namespace detail

inline nlohmann::json to_json(const CheckReport& r)
{
    using nlohmann::json;
    json j;
    j["check_name"] = r.check_name;
    j["grid_points"] = r.grid_points;
    j["max_rel_defect"] = r.max_rel_defect;
    j["max_abs_defect"] = r.max_abs_defect;
    j["worst_case"] = detail::point_json(r.worst_case);
    j["passed"] = r.passed;
    j["threshold"] = r.threshold;
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    json failures = json::array();
    for (const auto& row : r.rows)
        if (!row.error.empty())
            failures.push_back({{"point", detail::point_json(row.point)}, {"message", row.error}});
    j["failures"] = failures;
    json skipped = json::array();
    for (const auto& s : r.skipped)
        skipped.push_back({{"point", detail::point_json(s.point)}, {"reason", s.reason}});
    j["skipped"] = skipped;
    json notes = json::object();
    for (const auto& [k, v] : r.notes)
        notes[k] = v;
    j["notes"] = notes;
    return j;
}

inline nlohmann::json to_json(const std::vector<CheckReport>& reports)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports)
        arr.push_back(to_json(r));
    return arr;
}

inline void write_csv(std::ostream& os, const std::vector<CheckReport>& reports)
{
    using detail::fmt17;
    os << "check,alpha,beta,lambda_re,lambda_im,t,extra,computed_re,computed_im,reference_re,"
          "reference_im,abs_defect,rel_defect,error\n";
    for (const auto& r : reports)
        for (const auto& row : r.rows) {
            const CheckPoint& p = row.point;
            std::string extra;
            for (const auto& [k, v] : p.extra)
                extra += (extra.empty() ? "" : ";") + k + "=" + fmt17(v);
            os << r.check_name << ',' << fmt17(p.alpha) << ',' << fmt17(p.beta) << ','
               << fmt17(p.lambda.real()) << ',' << fmt17(p.lambda.imag()) << ',' << fmt17(p.t) << ','
               << extra << ',' << fmt17(row.computed.real()) << ',' << fmt17(row.computed.imag()) << ','
               << fmt17(row.reference.real()) << ',' << fmt17(row.reference.imag()) << ','
               << fmt17(row.abs_defect) << ',' << fmt17(row.rel_defect) << ','
               << detail::csv_quote(row.error) << '\n';
        }
}

} // namespace mlkit

#pragma once

#include "mlkit/asymptotics.hpp"
#include "mlkit/representation.hpp"
#include "mlkit/series.hpp"

#include <stdexcept>
#include <string>

namespace mlkit {

enum class Mode { Auto, Series, Repr, Asympt };

inline Mode parse_mode(const std::string& s)
{
    if (s == "auto") return Mode::Auto;
    if (s == "series") return Mode::Series;
    if (s == "repr") return Mode::Repr;
    if (s == "asympt") return Mode::Asympt;
    throw std::invalid_argument("unknown method '" + s + "' (auto, series, repr, asympt)");
}

/// t^{b-1} E_{a,b}(lambda t^a) by the requested method. Repr at t = 0 goes
/// through eval_at_zero.
inline EvalOutcome evaluate(double t, const MLParams& p, Mode mode = Mode::Auto,
                            double tol = default_quad_tol)
{
    switch (mode) {
    case Mode::Series: {
        const Region region = classify_region(p);
        const SeriesOutcome s = scaled_series(t, p, std::min(tol, 1e-15));
        return {s.value, Method::Series, region, s.truncation_bound + s.rounding_bound, {}, {}};
    }
    case Mode::Repr:
        return t == 0.0 ? eval_at_zero(p, tol) : eval_repr(t, p, tol);
    case Mode::Asympt:
        return eval_asymptotic(t, p);
    case Mode::Auto:
        break;
    }
    return evaluate_auto(t, p, tol);
}

} // namespace mlkit

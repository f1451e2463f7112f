#pragma once

#include <nlohmann/json.hpp>

#include "dps/genfun.hpp"
#include "dps/hypergeometric.hpp"
#include "dps/rational.hpp"
#include "dps/recurrence.hpp"
#include "dps/series.hpp"

namespace dps::json {

using nlohmann::json;

// Every decoder throws Error{schema} on malformed input.

json encode(const Rat& r);
Rat decode_rat(const json& j);

/// {"order": N, "coeffs": ["p/q", ...]}
json encode(const Series& s);
Series decode_series(const json& j);

/// {"coeffs": [...]}
json encode(const XPoly& p);
XPoly decode_xpoly(const json& j);

/// [{"n": k, "coeffs": [...]}, ...]
json encode(const PolySet& ps);
PolySet decode_polyset(const json& j);

/// {"all_zero": bool, "entries": [{"identity", "k", "n", "residual"}, ...]}
json encode(const IdentityReport& report);

/// {"num", "den", "scale", "prefactor": {"coeff", "power"}, "confluent": [{"b", "beta"}],
///  "arg_power", "start"}
json encode(const HypergeometricSpec& h);
HypergeometricSpec decode_hypergeometric(const json& j);

/// {"rows": N, "gamma": [[g_0^0], [g_1^0, g_1^1], ...]}
json encode(const RecurrenceTable& t);
RecurrenceTable decode_table(const json& j);

/// Parses text, mapping parse errors to Error{schema}.
json parse(const std::string& text);

}  // namespace dps::json

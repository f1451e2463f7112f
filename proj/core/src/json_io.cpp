#include "dps/json_io.hpp"

#include "dps/error.hpp"

namespace dps::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::schema, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

std::size_t decode_index(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<Rat> decode_rats(const json& j) {
  if (!j.is_array()) fail("expected an array of rationals");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(decode_rat(e));
  return out;
}

json encode_rats(std::span<const Rat> v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(encode(r));
  return a;
}

}  // namespace

json encode(const Rat& r) { return to_string(r); }

Rat decode_rat(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
  fail("rational must be a \"p/q\" string or an integer");
}

json encode(const Series& s) { return json{{"order", s.order()}, {"coeffs", encode_rats(s.coeffs())}}; }

Series decode_series(const json& j) {
  std::vector<Rat> c = decode_rats(field(j, "coeffs"));
  if (c.empty()) fail("a series needs at least one coefficient");
  if (j.contains("order") && decode_index(j["order"], "order") + 1 != c.size()) {
    fail("series order does not match the number of coefficients");
  }
  return Series(std::move(c));
}

json encode(const XPoly& p) { return json{{"coeffs", encode_rats(p.coeffs())}}; }

XPoly decode_xpoly(const json& j) { return XPoly(decode_rats(field(j, "coeffs"))); }

json encode(const PolySet& ps) {
  json a = json::array();
  for (std::size_t n = 0; n <= ps.order() && !ps.polys.empty(); ++n) {
    a.push_back(json{{"n", n}, {"coeffs", encode_rats(ps[n].coeffs())}});
  }
  return a;
}

PolySet decode_polyset(const json& j) {
  if (!j.is_array() || j.empty()) fail("a polynomial set is a nonempty array");
  PolySet ps;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (decode_index(field(j[i], "n"), "n") != i) fail("polynomial entries must be listed as n = 0, 1, 2, ...");
    XPoly p = decode_xpoly(j[i]);
    if (p.is_zero() || p.degree() != i || p.leading() != 1) {
      fail("P_" + std::to_string(i) + " is not monic of degree " + std::to_string(i));
    }
    ps.polys.push_back(std::move(p));
  }
  return ps;
}

json encode(const IdentityReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"identity", e.identity}, {"k", e.k}, {"n", e.n}, {"residual", encode(e.residual)}});
  }
  return json{{"all_zero", report.all_zero()}, {"entries", std::move(entries)}};
}

json encode(const HypergeometricSpec& h) {
  json confluent = json::array();
  for (const auto& c : h.confluent) confluent.push_back(json{{"b", encode(c.b)}, {"beta", encode(c.beta)}});
  return json{{"num", encode_rats(h.numerator_params)},
              {"den", encode_rats(h.denominator_params)},
              {"scale", encode(h.argument_scale)},
              {"arg_power", h.argument_power},
              {"prefactor", json{{"coeff", encode(h.prefactor_coeff)}, {"power", h.prefactor_power}}},
              {"start", h.first_term},
              {"confluent", std::move(confluent)}};
}

HypergeometricSpec decode_hypergeometric(const json& j) {
  HypergeometricSpec h;
  h.numerator_params = decode_rats(field(j, "num"));
  h.denominator_params = decode_rats(field(j, "den"));
  h.argument_scale = decode_rat(field(j, "scale"));
  const json& pre = field(j, "prefactor");
  h.prefactor_coeff = decode_rat(field(pre, "coeff"));
  h.prefactor_power = decode_index(field(pre, "power"), "prefactor power");
  if (j.contains("arg_power")) h.argument_power = decode_index(j["arg_power"], "arg_power");
  if (h.argument_power == 0) fail("arg_power must be positive");
  if (j.contains("start")) h.first_term = decode_index(j["start"], "start");
  if (j.contains("confluent")) {
    const json& c = j["confluent"];
    if (!c.is_array()) fail("confluent must be an array");
    for (const auto& e : c) h.confluent.push_back({decode_rat(field(e, "b")), decode_rat(field(e, "beta"))});
  }
  return h;
}

json encode(const RecurrenceTable& t) {
  json rows = json::array();
  for (const auto& row : t.gamma) rows.push_back(encode_rats(row));
  return json{{"rows", t.rows()}, {"gamma", std::move(rows)}};
}

RecurrenceTable decode_table(const json& j) {
  const json& rows = field(j, "gamma");
  if (!rows.is_array()) fail("gamma must be an array of rows");
  RecurrenceTable t;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    std::vector<Rat> row = decode_rats(rows[n]);
    if (row.size() != n + 1) fail("row " + std::to_string(n) + " of gamma must have " + std::to_string(n + 1) + " entries");
    t.gamma.push_back(std::move(row));
  }
  if (j.contains("rows") && decode_index(j["rows"], "rows") != t.rows()) fail("rows does not match gamma");
  return t;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace dps::json

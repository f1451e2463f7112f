#include "dps/rational.hpp"

#include <cctype>

#include "dps/error.hpp"

namespace dps {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_r: return "MalformedR";
    case Errc::bad_constant_term: return "BadConstantTerm";
    case Errc::pole_pochhammer: return "PolePochhammer";
    case Errc::zero_alpha: return "ZeroAlpha";
    case Errc::not_monic: return "NotMonic";
    case Errc::inconsistent_table: return "InconsistentTable";
    case Errc::degenerate_denominator: return "DegenerateDenominator";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::truncation: return "Truncation";
    case Errc::schema: return "Schema";
  }
  return "Unknown";
}

Rat make_rat(std::int64_t p, std::int64_t q) {
  if (q == 0) throw Error(Errc::invalid_params, "zero denominator");
  Rat r(mpz_class(std::to_string(p)), mpz_class(std::to_string(q)));
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s));
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw Error(Errc::schema, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) throw Error(Errc::schema, "zero denominator in '" + std::string(text) + "'");
  Rat r(to_mpz(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display(const Rat& r) {
  return r.get_str();
}

Rat factorial(std::size_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw Error(Errc::degenerate_denominator, "zero raised to a negative power");
    return pow(Rat(1) / base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(num, den);
}

}  // namespace dps

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dps {

/// Exact rational coefficient. gmpxx keeps every arithmetic result in
/// lowest terms with a positive denominator.
using Rat = mpq_class;

/// Builds p/q in lowest terms. q must be nonzero.
Rat make_rat(std::int64_t p, std::int64_t q = 1);

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws Error{schema}.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" form; integers are written with a "/1" denominator.
std::string to_string(const Rat& r);

/// Short human form: "p" for integers, "p/q" otherwise.
std::string to_display(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// n! as a rational.
Rat factorial(std::size_t n);

/// Integer power, exponent may be negative (base must then be nonzero).
Rat pow(const Rat& base, long exponent);

}  // namespace dps

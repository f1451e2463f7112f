#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dps {

enum class Errc {
  malformed_r,             // R(t) has a nonzero constant or linear coefficient
  bad_constant_term,       // exp/log called outside their domain
  pole_pochhammer,         // a denominator Pochhammer symbol vanished
  zero_alpha,              // some alpha_n = 0 inside the requested range
  not_monic,               // normalized P_n is not monic of degree n
  inconsistent_table,      // recurrence table rejects the recovered R
  degenerate_denominator,  // closed-form gamma hits a zero factor
  invalid_params,          // family parameters outside the validity region
  truncation,              // a series is too short for the requested order
  schema,                  // malformed external input (JSON, parameter strings)
};

const char* errc_name(Errc code) noexcept;

/// Single exception type for the library. `index()` carries the offending
/// coefficient index when there is one (ZeroAlpha(n), NotMonic(n), ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace dps

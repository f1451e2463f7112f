#include "dps/hypergeometric.hpp"

#include "dps/error.hpp"

namespace dps {

Rat pochhammer(const Rat& mu, std::size_t n) {
  Rat p(1);
  for (std::size_t j = 0; j < n; ++j) p *= mu + Rat(static_cast<unsigned long>(j));
  return p;
}

namespace {

// Ratio term_{m+1} / term_m, or a pole error when a denominator factor is zero.
Rat step_ratio(const HypergeometricSpec& spec, std::size_t m) {
  const Rat mm(static_cast<unsigned long>(m));
  Rat num(1), den(mm + 1);
  for (const auto& mu : spec.numerator_params) num *= mu + mm;
  for (const auto& pair : spec.confluent) num *= pair.b + mm * pair.beta;
  for (const auto& nu : spec.denominator_params) {
    Rat f = nu + mm;
    if (is_zero(f)) {
      throw Error(Errc::pole_pochhammer,
                  "denominator parameter " + to_string(nu) + " makes (nu)_" + std::to_string(m + 1) + " vanish",
                  m + 1);
    }
    den *= f;
  }
  return num / den;
}

}  // namespace

Rat hypergeom_term(const HypergeometricSpec& spec, std::size_t m) {
  Rat term(1);
  for (std::size_t j = 0; j < m; ++j) term *= step_ratio(spec, j);
  return term;
}

Series hypergeom_series(const HypergeometricSpec& spec, std::size_t order) {
  if (spec.argument_power == 0) throw Error(Errc::invalid_params, "argument power must be positive");
  std::vector<Rat> c(order + 1);
  const Rat z_unit = spec.argument_scale /
                     pow(Rat(static_cast<unsigned long>(spec.argument_power)), static_cast<long>(spec.argument_power));
  Rat term(1);     // hypergeometric coefficient of z^m
  Rat z_power(1);  // z_unit^m
  for (std::size_t m = 0;; ++m) {
    const std::size_t pos = spec.prefactor_power + spec.argument_power * m;
    if (pos > order) break;
    if (m >= spec.first_term) c[pos] += spec.prefactor_coeff * term * z_power;
    if (pos + spec.argument_power > order) break;
    term *= step_ratio(spec, m);
    z_power *= z_unit;
  }
  return Series(std::move(c));
}

}  // namespace dps

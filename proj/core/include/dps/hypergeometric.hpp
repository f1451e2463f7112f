#pragma once

#include <cstddef>
#include <vector>

#include "dps/rational.hpp"
#include "dps/series.hpp"

namespace dps {

/// Rising factorial (mu)_n = mu (mu+1) ... (mu+n-1), with (mu)_0 = 1.
Rat pochhammer(const Rat& mu, std::size_t n);

/// A numerator parameter b/beta kept together with its scale beta. It
/// contributes b (b+beta) ... (b+(m-1)beta) = (b/beta)_m beta^m to the m-th
/// term, which stays finite as beta -> 0 (the confluent limit b^m).
struct ConfluentPair {
  Rat b;
  Rat beta;

  friend bool operator==(const ConfluentPair&, const ConfluentPair&) = default;
};

/// One generalized hypergeometric block
///
///   prefactor_coeff * t^prefactor_power *
///     sum_{m >= first_term} prod (mu)_m * prod pairs / (prod (nu)_m * m!) * z^m
///
/// with z = argument_scale * (t / argument_power)^argument_power.
struct HypergeometricSpec {
  std::vector<Rat> numerator_params;
  std::vector<Rat> denominator_params;
  std::vector<ConfluentPair> confluent;
  Rat argument_scale{1};
  std::size_t argument_power = 1;
  Rat prefactor_coeff{1};
  std::size_t prefactor_power = 0;
  std::size_t first_term = 0;

  friend bool operator==(const HypergeometricSpec&, const HypergeometricSpec&) = default;
};

/// Coefficient of z^m in the block (without prefactor and argument scaling).
/// Throws Error{pole_pochhammer} if a denominator Pochhammer vanishes.
Rat hypergeom_term(const HypergeometricSpec& spec, std::size_t m);

/// The block expanded as a series in t through `order`.
Series hypergeom_series(const HypergeometricSpec& spec, std::size_t order);

}  // namespace dps

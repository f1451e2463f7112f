#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dps/series.hpp"

namespace dps {

/// Inputs of a generating function F(x t - R(t)) = sum alpha_n P_n(x) t^n.
///
/// `alpha` holds F's coefficients, `r` holds R(t) as a plain t-series
/// (use Series::r_value for the R_n convention). Both must be known
/// through index `order`.
struct GenSpec {
  Series alpha;
  Series r;
  std::size_t order = 0;

  /// Throws ZeroAlpha(n), MalformedR or Truncation when the hypotheses fail:
  /// alpha_0 = 1, alpha_n != 0 for 1 <= n <= order, R_0 = R_1 = 0.
  void validate() const;
};

/// Builds and validates a GenSpec.
GenSpec make_gen_spec(Series alpha, Series r, std::size_t order);

/// Monic polynomial set P_0..P_N.
struct PolySet {
  std::vector<XPoly> polys;
  std::string provenance = "external";

  std::size_t order() const { return polys.empty() ? 0 : polys.size() - 1; }
  const XPoly& operator[](std::size_t n) const { return polys.at(n); }
};

/// P_n = [t^n] F(x t - R(t)) / alpha_n for n <= spec.order.
/// Throws NotMonic(n) if a normalized entry is not monic of degree n.
PolySet expand_ps(const GenSpec& spec);

/// Residual of the differential identity
///   alpha_n x P_n' - sum_{k=1}^{n-1} R_{k+1} alpha_{n-k} P_{n-k}' - n alpha_n P_n,
/// which vanishes for every polynomial set produced by expand_ps.
XPoly gf1_residual(const GenSpec& spec, const PolySet& ps, std::size_t n);

/// R = -log(A) for an Appell factor A(t) exp(x t). A(0) must be 1.
Series appell_r_from_a(const Series& a);

}  // namespace dps

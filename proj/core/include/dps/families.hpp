#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dps/genfun.hpp"
#include "dps/rational.hpp"
#include "dps/series.hpp"
#include "dps/symmetry.hpp"

namespace dps {

/// Exact expansions of the closed forms the families are built from.
namespace expanders {
/// (1 - a t)^{-lambda} via c_{n+1} = c_n a (lambda + n) / (n + 1).
Series binomial(const Rat& a, const Rat& lambda, std::size_t order);
/// -log(1 - a t) = sum a^n t^n / n.
Series mercator(const Rat& a, std::size_t order);
/// exp(a t).
Series exponential(const Rat& a, std::size_t order);
}  // namespace expanders

using Params = std::map<std::string, Rat>;

struct FamilySpec {
  std::string name;
  std::size_t d = 0;
  GenSpec gen;
  /// Closed-form gamma_n^l for l <= n.
  std::function<Rat(std::size_t n, std::size_t l)> expected_gamma;
  /// Present for families with R = t1 t^{d+1}/(d+1).
  std::optional<SymmetricSpec> symmetric;
  std::string notes;
};

/// Builds the named family through order N (N >= 1). Unknown names and
/// parameters outside the validity region throw InvalidParams.
FamilySpec make_family(const std::string& kind, const Params& params, std::size_t order);

struct FamilyInfo {
  std::string name;
  std::string params;
  std::string description;
};

const std::vector<FamilyInfo>& family_catalog();
std::vector<std::string> family_names();

/// Parses "k=v,k=v" with rational values. Throws Error{schema}.
Params parse_params(const std::string& text);

/// P_0..P_N from x P_{n+d} = P_{n+d+1} + b P_n with P_n = x^n for n <= d
/// and P_{d+1} = x P_d - (d+1) b.
PolySet chebyshev_dd1(std::size_t d, const Rat& b, std::size_t order);

/// Coefficients of (1 - d b t^{d+1}) / (1 - x t + b t^{d+1}) through t^N.
XSeries chebyshev_rational_gf(std::size_t d, const Rat& b, std::size_t order);

/// Pairwise differences of the three Chebyshev routes: the recurrence, the
/// rational generating function, and n [t^n] of 1 - log(1 - x t + b t^{d+1}).
struct ChebyConsistency {
  std::vector<XPoly> recurrence_vs_rational;
  std::vector<XPoly> recurrence_vs_log;
  bool all_zero() const;
};

ChebyConsistency cheby_consistency(std::size_t d, const Rat& b, std::size_t order);

}  // namespace dps

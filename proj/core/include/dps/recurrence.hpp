#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dps/genfun.hpp"
#include "dps/rational.hpp"
#include "dps/series.hpp"

namespace dps {

/// Coefficients gamma_n^l of x P_n = P_{n+1} + sum_{l=0}^{n} gamma_n^l P_{n-l},
/// one row per n = 0..rows()-1. Row n has n+1 entries.
struct RecurrenceTable {
  std::vector<std::vector<Rat>> gamma;

  std::size_t rows() const { return gamma.size(); }
  /// gamma_n^l, zero when l > n (P_{n-l} = 0 there).
  Rat at(std::size_t n, std::size_t l) const;
};

/// Back-substitution in the monic basis. Uses P_0..P_N, yields rows 0..N-1.
RecurrenceTable extract_recurrence(const PolySet& ps);

/// x P_n rebuilt from the table; equals mul_x(ps[n]) for a faithful table.
XPoly rebuild_x_pn(const RecurrenceTable& table, const PolySet& ps, std::size_t n);

struct OrderVerdict {
  /// False when the data cannot support a finite order: the largest nonzero
  /// column is too close to the truncation (2d >= rows).
  bool finite = true;
  std::size_t d = 0;
  /// First n with gamma_n^d != 0; empty when the whole table is zero (d = 0).
  std::optional<std::size_t> witness_n;
};

/// Smallest d with gamma_n^l = 0 for every l > d over the observed rows.
OrderVerdict detect_order(const RecurrenceTable& table);

/// d-orthogonality regularity: gamma_n^d != 0 for all observed n >= d.
bool is_regular(const RecurrenceTable& table, std::size_t d);

/// a_n = alpha_n / alpha_{n+1} and c_n^l = (alpha_n / alpha_{n-l}) gamma_n^l.
class CTable {
 public:
  CTable(const Series& alpha, const RecurrenceTable& table);

  std::size_t rows() const { return c_.size(); }
  /// Valid for n < rows(); a_n needs alpha_{n+1}.
  const Rat& a(std::size_t n) const;
  /// Zero for l > n; c_n^0 = gamma_n^0.
  Rat c(std::size_t n, std::size_t l) const;

 private:
  std::vector<Rat> a_;
  std::vector<std::vector<Rat>> c_;
};

struct IdentityResidual {
  std::string identity;
  std::size_t k = 0;
  std::size_t n = 0;
  Rat residual;
};

struct IdentityReport {
  std::vector<IdentityResidual> entries;

  bool all_zero() const;
  /// First entry with a nonzero residual, or nullptr.
  const IdentityResidual* first_failure() const;
  void append(const IdentityReport& other);
};

/// Identity names used in reports.
namespace identity {
inline constexpr const char* kOrderBound = "order_bound";      // gamma_n^l = 0 for l > d
inline constexpr const char* kGamma0 = "gamma0_vanishes";      // gamma_n^0 = 0
inline constexpr const char* kFirstColumn = "first_column";    // k = 1
inline constexpr const char* kSecondColumn = "second_column";  // k = 2
inline constexpr const char* kLowBand = "low_band";            // 3 <= k <= d
inline constexpr const char* kMidBand = "mid_band";            // d+1 <= k <= 2d+1
inline constexpr const char* kTail = "tail";                   // k >= 2d+2
inline constexpr const char* kRiccati = "riccati";
inline constexpr const char* kRecursiveSystem = "recursive_system";
inline constexpr const char* kRecoverR = "recover_r";
inline constexpr const char* kClassical = "derivative_gamma";
}  // namespace identity

/// Checks every coefficient identity satisfied by a d-PS generated by
/// F(x t - R(t)) at each (k, n) the truncation allows, k <= kmax
/// (default 2d + 6). Residuals are exact.
IdentityReport verify_prop2(const GenSpec& spec, const RecurrenceTable& table, std::size_t d,
                            std::optional<std::size_t> kmax = std::nullopt);

/// Reconstructs R(t) through order kmax from alpha and the table alone by
/// solving the k-th identity at n = k for R_{k+1}. Every other row is used
/// as a consistency check (Error{inconsistent_table} on any mismatch).
Series recover_r(const Series& alpha, const RecurrenceTable& table, std::size_t kmax);

/// R_{d+1}((n+2) c_n^d - (n-d) c_{n-d}^d) - (d+1) c_n^d c_{n-d}^d - R_{d+1}^2,
/// zero for n >= 2d+1 whenever R is a polynomial of degree at most d+1.
Rat riccati_residual(const CTable& ctable, const Rat& r_d1, std::size_t d, std::size_t n);

/// Residual of the d-order linear system linking c^m (1 <= m <= d-1) to
/// the top column c^d, for polynomial R of degree d+1 and n >= m+d+1.
Rat recursive_system_residual(const CTable& ctable, const Series& r, std::size_t d, std::size_t m, std::size_t n);

/// Q_n = P'_{n+1} / (n+1) for n = 0..N-1.
PolySet derivative_ps(const PolySet& ps);

struct ClassicalReport {
  /// Primary verdict: recovered R is a polynomial of degree exactly d+1.
  bool classical = false;
  Series recovered_r;
  /// Order detected on the derivative set.
  OrderVerdict derivative_order;
  /// gamma~_n^l of the derivative set against the closed form, d <= n.
  IdentityReport derivative_residuals;
};

ClassicalReport classical_check(const GenSpec& spec, const PolySet& ps, std::size_t d);

}  // namespace dps

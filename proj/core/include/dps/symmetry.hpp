#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dps/genfun.hpp"
#include "dps/hypergeometric.hpp"
#include "dps/rational.hpp"
#include "dps/recurrence.hpp"
#include "dps/series.hpp"

namespace dps {

/// [x^k] P_n = 0 whenever k and n differ mod d+1, for every n <= N.
/// Equivalent to P_n(w x) = w^n P_n(x) with w a primitive (d+1)-th root of unity.
bool is_d_symmetric(const PolySet& ps, std::size_t d);

/// x P_n = P_{n+1} + gamma_n^d P_{n-d}: every column other than d vanishes.
bool recurrence_is_d_symmetric(const RecurrenceTable& table, std::size_t d);

/// b_n = (n+1) alpha_{n+1} / alpha_n of a d-symmetric family, stored by its
/// linear law b_{md+r} = beta_r m + b_r (m >= 0, 1 <= r <= d) plus b_0 = alpha_1.
class BSequence {
 public:
  /// b_0, base = (b_1..b_d), beta = (beta_1..beta_d). Throws InvalidParams on
  /// size mismatch or d = 0.
  BSequence(Rat b0, std::vector<Rat> base, std::vector<Rat> beta);

  /// Reads b_0..b_{2d} off alpha (order >= 2d+1 needed).
  static BSequence from_alpha(const Series& alpha, std::size_t d);

  std::size_t d() const { return base_.size(); }
  Rat b(std::size_t n) const;
  const Rat& b0() const { return b0_; }
  /// b_r and beta_r for 1 <= r <= d.
  const Rat& base(std::size_t r) const { return base_.at(r - 1); }
  const Rat& beta(std::size_t r) const { return beta_.at(r - 1); }
  /// 2 b_d - b_{2d} = b_d - beta_d.
  Rat tilde_beta_d() const { return base(d()) - beta(d()); }

  friend bool operator==(const BSequence&, const BSequence&) = default;

 private:
  Rat b0_;
  std::vector<Rat> base_;
  std::vector<Rat> beta_;
};

/// (n+1) alpha_{n+1} / alpha_n read directly from a series.
Rat observed_b(const Series& alpha, std::size_t n);

/// First n whose observed b_n departs from `bseq`, or nothing when the
/// linear law holds through the series order.
std::optional<std::size_t> linear_law_violation(const Series& alpha, const BSequence& bseq);

/// prod_{l<n} b_l / n!.
Rat alpha_from_b(const BSequence& bseq, std::size_t n);

/// R(t) = t1 t^{d+1} / (d+1) together with alpha given by its b-sequence.
struct SymmetricSpec {
  Rat t1;
  BSequence bseq;

  std::size_t d() const { return bseq.d(); }
  Series alpha(std::size_t order) const;
  Series r(std::size_t order) const;
  GenSpec to_gen_spec(std::size_t order) const;
};

/// Reads t1 and the b-sequence off a generating function whose R is a single
/// monomial of degree d+1. Throws InvalidParams otherwise.
SymmetricSpec symmetric_from_gen(const GenSpec& spec, std::size_t d);

/// gamma_n^d from the alpha ratios; valid for n >= d.
Rat gamma_from_alpha_ratios(const SymmetricSpec& spec, std::size_t n);
/// gamma_n^d from the b parameters as a product over residue classes; n >= d.
/// Throws DegenerateDenominator when a factor beta_l m + b_l vanishes.
Rat gamma_from_b_params(const SymmetricSpec& spec, std::size_t n);
/// Both closed forms; throws InconsistentTable if they disagree.
Rat gamma_closed_form(const SymmetricSpec& spec, std::size_t n);

/// F(t) = 1 + sum of the returned blocks, one per residue class r = 1..d of
/// the exponent mod d (block r carries t^{md+r}). Zero beta_l become
/// confluent pairs, so every degenerate case is covered.
std::vector<HypergeometricSpec> F_hypergeom_rep(const SymmetricSpec& spec);

/// Same as F_hypergeom_rep with the r = d block replaced by one dF_{d-1}
/// block in t^{md}, m >= 1. Needs tilde_beta_d != 0; empty otherwise.
std::optional<std::vector<HypergeometricSpec>> F_alternative_rep(const SymmetricSpec& spec);

/// 1 + sum of blocks - alpha, through `order`. Zero iff the blocks are exact.
Series verify_F_rep(const SymmetricSpec& spec, const std::vector<HypergeometricSpec>& blocks, std::size_t order);

}  // namespace dps

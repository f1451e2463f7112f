#include "dps/symmetry.hpp"

#include "dps/error.hpp"

namespace dps {

namespace {

Rat q(std::size_t v) { return Rat(static_cast<unsigned long>(v)); }

}  // namespace

bool is_d_symmetric(const PolySet& ps, std::size_t d) {
  for (std::size_t n = 0; n <= ps.order(); ++n) {
    const auto coeffs = ps[n].coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if ((n - k) % (d + 1) != 0 && !is_zero(coeffs[k])) return false;
    }
  }
  return true;
}

bool recurrence_is_d_symmetric(const RecurrenceTable& table, std::size_t d) {
  for (std::size_t n = 0; n < table.rows(); ++n) {
    for (std::size_t l = 0; l <= n; ++l) {
      if (l != d && !is_zero(table.gamma[n][l])) return false;
    }
  }
  return true;
}

// -------------------------------------------------------------- BSequence

BSequence::BSequence(Rat b0, std::vector<Rat> base, std::vector<Rat> beta)
    : b0_(std::move(b0)), base_(std::move(base)), beta_(std::move(beta)) {
  if (base_.empty()) throw Error(Errc::invalid_params, "a b-sequence needs d >= 1");
  if (base_.size() != beta_.size()) throw Error(Errc::invalid_params, "b_1..b_d and beta_1..beta_d differ in length");
}

Rat observed_b(const Series& alpha, std::size_t n) {
  if (n + 1 > alpha.order()) throw Error(Errc::truncation, "b_n needs alpha_{n+1}", n + 1);
  if (is_zero(alpha[n])) throw Error(Errc::zero_alpha, "b_n needs alpha_n != 0", n);
  return q(n + 1) * alpha[n + 1] / alpha[n];
}

BSequence BSequence::from_alpha(const Series& alpha, std::size_t d) {
  if (d == 0) throw Error(Errc::invalid_params, "a b-sequence needs d >= 1");
  if (alpha.order() < 2 * d + 1) throw Error(Errc::truncation, "reading b_0..b_{2d} needs alpha through 2d+1");
  std::vector<Rat> base(d), beta(d);
  for (std::size_t r = 1; r <= d; ++r) {
    base[r - 1] = observed_b(alpha, r);
    beta[r - 1] = observed_b(alpha, d + r) - base[r - 1];
  }
  return BSequence(observed_b(alpha, 0), std::move(base), std::move(beta));
}

Rat BSequence::b(std::size_t n) const {
  if (n == 0) return b0_;
  const std::size_t r = (n - 1) % d() + 1;
  const std::size_t m = (n - r) / d();
  return beta(r) * q(m) + base(r);
}

std::optional<std::size_t> linear_law_violation(const Series& alpha, const BSequence& bseq) {
  for (std::size_t n = 0; n + 1 <= alpha.order(); ++n) {
    if (is_zero(alpha[n])) return n;
    if (observed_b(alpha, n) != bseq.b(n)) return n;
  }
  return std::nullopt;
}

Rat alpha_from_b(const BSequence& bseq, std::size_t n) {
  Rat prod(1);
  for (std::size_t l = 0; l < n; ++l) prod *= bseq.b(l) / q(l + 1);
  return prod;
}

// ---------------------------------------------------------- SymmetricSpec

Series SymmetricSpec::alpha(std::size_t order) const {
  std::vector<Rat> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) c[n] = c[n - 1] * bseq.b(n - 1) / q(n);
  return Series(std::move(c));
}

Series SymmetricSpec::r(std::size_t order) const { return Series::monomial(t1 / q(d() + 1), d() + 1, order); }

GenSpec SymmetricSpec::to_gen_spec(std::size_t order) const { return make_gen_spec(alpha(order), r(order), order); }

SymmetricSpec symmetric_from_gen(const GenSpec& spec, std::size_t d) {
  if (d == 0 || spec.r.order() < d + 1) throw Error(Errc::invalid_params, "R must be known through t^{d+1}");
  for (std::size_t k = 0; k <= spec.r.order(); ++k) {
    if (k != d + 1 && !is_zero(spec.r[k])) {
      throw Error(Errc::invalid_params, "R is not a single monomial of degree d+1", k);
    }
  }
  return SymmetricSpec{spec.r.r_value(d + 1), BSequence::from_alpha(spec.alpha, d)};
}

// ---------------------------------------------------------- closed forms

Rat gamma_from_alpha_ratios(const SymmetricSpec& spec, std::size_t n) {
  const std::size_t d = spec.d();
  if (n < d) throw Error(Errc::truncation, "closed-form gamma needs n >= d", n);
  const Rat an = alpha_from_b(spec.bseq, n);
  const Rat an1 = alpha_from_b(spec.bseq, n + 1);
  if (is_zero(an) || is_zero(an1)) throw Error(Errc::degenerate_denominator, "alpha vanishes in the ratio", n);
  return spec.t1 / q(d + 1) *
         (q(n - d + 1) * alpha_from_b(spec.bseq, n - d + 1) / an1 - q(n - d) * alpha_from_b(spec.bseq, n - d) / an);
}

Rat gamma_from_b_params(const SymmetricSpec& spec, std::size_t n) {
  const std::size_t d = spec.d();
  const auto& bs = spec.bseq;
  if (n < d) throw Error(Errc::truncation, "closed-form gamma needs n >= d", n);
  auto nonzero = [n](const Rat& f) -> const Rat& {
    if (is_zero(f)) throw Error(Errc::degenerate_denominator, "a factor beta_l m + b_l vanishes", n);
    return f;
  };
  if (n == d) {
    Rat den(1);
    for (std::size_t l = 1; l <= d; ++l) den *= nonzero(bs.base(l));
    return spec.t1 * factorial(d) / den;
  }
  const std::size_t r = (n - 1) % d + 1;
  const std::size_t m = (n - r) / d;
  const Rat mm = q(m);
  Rat den(1);
  for (std::size_t l = 1; l <= r; ++l) den *= nonzero(bs.beta(l) * mm + bs.base(l));
  for (std::size_t l = r; l <= d; ++l) den *= nonzero(bs.beta(l) * (mm - 1) + bs.base(l));
  // n! / (n-d)! as a falling product.
  Rat falling(1);
  for (std::size_t j = n - d + 1; j <= n; ++j) falling *= q(j);
  const Rat num = bs.beta(r) * (mm - q(r) - 1) + q(d + 1) * bs.base(r);
  return spec.t1 / q(d + 1) * falling * num / den;
}

Rat gamma_closed_form(const SymmetricSpec& spec, std::size_t n) {
  const Rat from_b = gamma_from_b_params(spec, n);
  const Rat from_alpha = gamma_from_alpha_ratios(spec, n);
  if (from_b != from_alpha) {
    throw Error(Errc::inconsistent_table,
                "closed forms disagree at n=" + std::to_string(n) + ": " + to_string(from_b) + " vs " +
                    to_string(from_alpha),
                n);
  }
  return from_b;
}

// --------------------------------------------------------- F from blocks

namespace {

// Adds the factor prod_{j<m} (b + j beta) to the block: a plain numerator
// parameter b/beta with beta absorbed into the argument scale, or a
// confluent pair b^m when beta = 0.
void add_pair(HypergeometricSpec& h, const Rat& b, const Rat& beta) {
  if (is_zero(beta)) {
    h.confluent.push_back({b, beta});
  } else {
    h.numerator_params.push_back(b / beta);
    h.argument_scale *= beta;
  }
}

}  // namespace

std::vector<HypergeometricSpec> F_hypergeom_rep(const SymmetricSpec& spec) {
  const std::size_t d = spec.d();
  const auto& bs = spec.bseq;
  std::vector<HypergeometricSpec> blocks;
  // Block r collects alpha_{md+r}: with n = md+r,
  //   prod_{l<n} b_l = alpha_r r! prod_{s<r} (b_{s+d}, beta_s)_m prod_{s>=r} (b_s, beta_s)_m
  // and n!/r! = d^{md} prod_{i=1}^{d} ((r+i)/d)_m, where (r+i)/d = 1 gives m!.
  for (std::size_t r = 1; r <= d; ++r) {
    HypergeometricSpec h;
    h.argument_power = d;
    h.prefactor_power = r;
    h.prefactor_coeff = alpha_from_b(bs, r);
    if (r == d) h.numerator_params.push_back(Rat(1));
    for (std::size_t s = 1; s < r; ++s) add_pair(h, bs.b(s + d), bs.beta(s));
    for (std::size_t s = r; s <= d; ++s) add_pair(h, bs.base(s), bs.beta(s));
    for (std::size_t i = 1; i <= d; ++i) {
      if (r + i != d) h.denominator_params.push_back(q(r + i) / q(d));
    }
    blocks.push_back(std::move(h));
  }
  return blocks;
}

std::optional<std::vector<HypergeometricSpec>> F_alternative_rep(const SymmetricSpec& spec) {
  const std::size_t d = spec.d();
  const auto& bs = spec.bseq;
  const Rat tb = bs.tilde_beta_d();
  if (is_zero(tb)) return std::nullopt;
  std::vector<HypergeometricSpec> blocks = F_hypergeom_rep(spec);
  // alpha_{md} = (b_0 / tb) (tb, beta_d)_m prod_{s<d} (b_s, beta_s)_m / (m! prod_{i<d} (i/d)_m d^{md}),
  // using b_{kd} = beta_d k + tb for k >= 1.
  HypergeometricSpec h;
  h.argument_power = d;
  h.prefactor_coeff = bs.b0() / tb;
  h.first_term = 1;
  add_pair(h, tb, bs.beta(d));
  for (std::size_t s = 1; s < d; ++s) add_pair(h, bs.base(s), bs.beta(s));
  for (std::size_t i = 1; i < d; ++i) h.denominator_params.push_back(q(i) / q(d));
  blocks.back() = std::move(h);
  return blocks;
}

Series verify_F_rep(const SymmetricSpec& spec, const std::vector<HypergeometricSpec>& blocks, std::size_t order) {
  Series sum = Series::one(order);
  for (const auto& h : blocks) sum = sum + hypergeom_series(h, order);
  return sum - spec.alpha(order);
}

}  // namespace dps

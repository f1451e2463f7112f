#include <doctest.h>

#include "dps/error.hpp"
#include "dps/families.hpp"
#include "dps/symmetry.hpp"
#include "oracle/oracle.hpp"

using dps::BSequence;
using dps::Errc;
using dps::Error;
using dps::make_rat;
using dps::Rat;
using dps::Series;
using dps::SymmetricSpec;

namespace {

Rat q(std::size_t v) { return Rat(static_cast<unsigned long>(v)); }

SymmetricSpec spec_of(Rat t1, Rat b0, std::vector<Rat> base, std::vector<Rat> beta) {
  return SymmetricSpec{std::move(t1), BSequence(std::move(b0), std::move(base), std::move(beta))};
}

// Random spec with positive b and an arbitrary mask of vanishing beta.
SymmetricSpec random_spec(oracle::RandomRat& rnd, std::size_t d, unsigned zero_mask) {
  std::vector<Rat> base(d), beta(d);
  for (std::size_t r = 0; r < d; ++r) {
    base[r] = rnd.positive();
    beta[r] = (zero_mask >> r) & 1u ? Rat(0) : rnd.positive();
  }
  return spec_of(rnd.nonzero(), rnd.positive(), base, beta);
}

bool is_zero_series(const Series& s) {
  for (const auto& c : s.coeffs()) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("support congruence") {
  const auto gh2 = dps::expand_ps(dps::make_family("hermite_gould_hopper", {{"d", 2}}, 12).gen);
  CHECK(dps::is_d_symmetric(gh2, 2));
  CHECK_FALSE(dps::is_d_symmetric(gh2, 1));
  const auto he = dps::expand_ps(dps::make_family("hermite_gould_hopper", {{"d", 1}}, 12).gen);
  CHECK(dps::is_d_symmetric(he, 1));
  const auto mixed = dps::expand_ps(dps::make_family("appell", {{"d", 2}, {"r2", Rat(1)}, {"r3", Rat(1)}}, 12).gen);
  CHECK_FALSE(dps::is_d_symmetric(mixed, 2));
  CHECK_FALSE(dps::is_d_symmetric(mixed, 1));
}

TEST_CASE("support congruence and a single recurrence column go together") {
  const std::vector<std::pair<std::string, dps::Params>> cases{
      {"hermite_gould_hopper", {{"d", 3}}},
      {"humbert", {{"d", 2}, {"beta", make_rat(1, 2)}}},
      {"chebyshev_dops", {{"d", 3}}},
      {"appell", {{"d", 2}, {"r2", Rat(1)}, {"r3", Rat(2)}}},
      {"appell", {{"d", 3}, {"r2", Rat(0)}, {"r3", Rat(1)}, {"r4", Rat(1)}}},
      {"b_linear", {{"d", 2}, {"b1", Rat(3)}, {"beta2", Rat(1)}}},
  };
  for (const auto& [kind, params] : cases) {
    CAPTURE(kind);
    const auto f = dps::make_family(kind, params, 16);
    const auto ps = dps::expand_ps(f.gen);
    const auto t = dps::extract_recurrence(ps);
    CHECK(dps::is_d_symmetric(ps, f.d) == dps::recurrence_is_d_symmetric(t, f.d));
    CHECK(dps::is_d_symmetric(ps, f.d) == f.symmetric.has_value());
  }
}

TEST_CASE("alpha from the b-sequence") {
  // b_n = 1 for all n: alpha_n = 1/n!.
  const BSequence ones(Rat(1), {Rat(1)}, {Rat(0)});
  for (std::size_t n = 0; n <= 10; ++n) CHECK(dps::alpha_from_b(ones, n) == Rat(1) / oracle::fact(n));

  // b_n = lambda + n: alpha_n = (lambda)_n / n!, the binomial series.
  const Rat lambda = make_rat(2, 3);
  const BSequence binom(lambda, {lambda + 1}, {Rat(1)});
  const Series ref = dps::expanders::binomial(Rat(1), lambda, 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(dps::alpha_from_b(binom, n) == ref[n]);

  // d = 2 with constant b_1, b_2 on odd and even indices: cosh and sinh.
  const Rat a1 = make_rat(3, 5), b1 = Rat(2), b2 = make_rat(1, 7);
  const BSequence ch(a1, {b1, b2}, {Rat(0), Rat(0)});
  for (std::size_t m = 1; m <= 6; ++m) {
    const Rat p = dps::pow(b1 * b2, static_cast<long>(m));
    CHECK(dps::alpha_from_b(ch, 2 * m) == a1 / b2 * p / oracle::fact(2 * m));
    CHECK(dps::alpha_from_b(ch, 2 * m + 1) == a1 / b2 * b2 * p / oracle::fact(2 * m + 1));
  }
  CHECK(dps::alpha_from_b(ch, 1) == a1);
}

TEST_CASE("b-sequences read off alpha") {
  oracle::RandomRat rnd(21);
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto s = random_spec(rnd, d, 0);
    const Series a = s.alpha(4 * d + 4);
    CHECK(BSequence::from_alpha(a, d) == s.bseq);
    CHECK_FALSE(dps::linear_law_violation(a, s.bseq).has_value());
    for (std::size_t n = 0; n < a.order(); ++n) CHECK(dps::observed_b(a, n) == s.bseq.b(n));
  }
  // alpha_n = 1/(n!)^2 has b_n = 1/(n+1), not linear in n.
  std::vector<Rat> c(10);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = Rat(1) / (oracle::fact(n) * oracle::fact(n));
  const Series a(c);
  const auto bs = BSequence::from_alpha(a, 1);
  CHECK(bs.base(1) == make_rat(1, 2));
  CHECK(bs.beta(1) == make_rat(-1, 6));
  CHECK(dps::linear_law_violation(a, bs) == 3u);

  CHECK_THROWS_AS(BSequence::from_alpha(a, 5), Error);
  CHECK_THROWS_AS(BSequence(Rat(1), {}, {}), Error);
  CHECK_THROWS_AS(BSequence(Rat(1), {Rat(1)}, {}), Error);
}

TEST_CASE("symmetric specs round-trip through a generating function") {
  oracle::RandomRat rnd(5);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto s = random_spec(rnd, d, 1u);
    const auto gen = s.to_gen_spec(3 * d + 3);
    CHECK(gen.r.r_value(d + 1) == s.t1);
    const auto back = dps::symmetric_from_gen(gen, d);
    CHECK(back.t1 == s.t1);
    CHECK(back.bseq == s.bseq);
  }
  const auto appell = dps::make_family("appell", {{"d", 2}, {"r2", Rat(1)}, {"r3", Rat(1)}}, 10);
  try {
    dps::symmetric_from_gen(appell.gen, 2);
    FAIL("expected InvalidParams");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_params);
    CHECK(e.index() == 2u);
  }
}

TEST_CASE("closed-form gamma: hand values") {
  // n = d: T1 d! / (b_1 ... b_d).
  const auto s = spec_of(Rat(3), Rat(1), {Rat(2), make_rat(1, 2), Rat(5)}, {Rat(1), Rat(0), Rat(2)});
  CHECK(dps::gamma_from_b_params(s, 3) == Rat(3) * 6 / 5);
  CHECK(dps::gamma_from_alpha_ratios(s, 3) == Rat(3) * 6 / 5);

  // d = 1, b = 1 throughout (Hermite with T1): gamma_n^1 = T1 n.
  const auto he = spec_of(make_rat(2, 3), Rat(1), {Rat(1)}, {Rat(0)});
  for (std::size_t n = 1; n <= 20; ++n) CHECK(dps::gamma_closed_form(he, n) == make_rat(2, 3) * q(n));

  CHECK_THROWS_AS(dps::gamma_from_b_params(he, 0), Error);
  CHECK_THROWS_AS(dps::gamma_from_alpha_ratios(he, 0), Error);
}

TEST_CASE("closed-form gamma agrees with the extracted recurrence") {
  oracle::RandomRat rnd(13);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t d = rnd.index(1, 4);
    const auto s = random_spec(rnd, d, static_cast<unsigned>(rnd.index(0, (1u << d) - 1)));
    const std::size_t order = 30;
    const auto t = dps::extract_recurrence(dps::expand_ps(s.to_gen_spec(order)));
    CAPTURE(d);
    CHECK(dps::recurrence_is_d_symmetric(t, d));
    for (std::size_t n = d; n < t.rows(); ++n) {
      CAPTURE(n);
      CHECK(dps::gamma_from_b_params(s, n) == t.at(n, d));
      CHECK(dps::gamma_from_alpha_ratios(s, n) == t.at(n, d));
    }
  }
}

TEST_CASE("a vanishing factor makes the b-parameter form degenerate") {
  // b_2 = beta_2 * 0 + b_2 = 0 enters the n = d product.
  const auto s = spec_of(Rat(1), Rat(1), {Rat(1), Rat(0)}, {Rat(1), Rat(1)});
  try {
    dps::gamma_from_b_params(s, 2);
    FAIL("expected DegenerateDenominator");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_denominator);
  }
  CHECK_THROWS_AS(dps::gamma_closed_form(s, 2), Error);
}

TEST_CASE("R recovered from a symmetric family is a single monomial") {
  oracle::RandomRat rnd(17);
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto s = random_spec(rnd, d, 0);
    const std::size_t kmax = 3 * d + 6;
    const auto gen = s.to_gen_spec(kmax + 2);
    const Series rec = dps::recover_r(gen.alpha, dps::extract_recurrence(dps::expand_ps(gen)), kmax);
    CHECK(rec == Series::monomial(s.t1 / q(d + 1), d + 1, kmax));
  }
}

TEST_CASE("F blocks: structure for d = 2") {
  const auto s = spec_of(Rat(1), make_rat(1, 3), {Rat(2), Rat(5)}, {Rat(3), Rat(0)});
  const auto blocks = dps::F_hypergeom_rep(s);
  REQUIRE(blocks.size() == 2);
  // r = 1: pairs (b_1, beta_1), (b_2, beta_2); denominator 3/2.
  CHECK(blocks[0].prefactor_power == 1);
  CHECK(blocks[0].prefactor_coeff == make_rat(1, 3));
  CHECK(blocks[0].argument_power == 2);
  CHECK(blocks[0].numerator_params == std::vector<Rat>{make_rat(2, 3)});
  CHECK(blocks[0].argument_scale == 3);
  CHECK(blocks[0].confluent == std::vector<dps::ConfluentPair>{{Rat(5), Rat(0)}});
  CHECK(blocks[0].denominator_params == std::vector<Rat>{make_rat(3, 2)});
  // r = 2: leading 1, pairs (b_3, beta_1), (b_2, beta_2); denominators 3/2, 2.
  CHECK(blocks[1].prefactor_power == 2);
  CHECK(blocks[1].prefactor_coeff == make_rat(1, 3) * 2 / 2);
  CHECK(blocks[1].numerator_params == std::vector<Rat>{Rat(1), make_rat(5, 3)});
  CHECK(blocks[1].denominator_params == std::vector<Rat>{make_rat(3, 2), Rat(2)});
  CHECK(dps::verify_F_rep(s, blocks, 30) == Series::zero(30));
}

TEST_CASE("F blocks reproduce known closed forms") {
  SUBCASE("exp") {
    const auto s = spec_of(Rat(1), Rat(1), {Rat(1)}, {Rat(0)});
    const auto blocks = dps::F_hypergeom_rep(s);
    const Series f = Series::one(15) + dps::hypergeom_series(blocks[0], 15);
    CHECK(f == dps::expanders::exponential(Rat(1), 15));
  }
  SUBCASE("exp(2t) split by parity") {
    const auto s = spec_of(Rat(2), Rat(2), {Rat(2), Rat(2)}, {Rat(0), Rat(0)});
    CHECK(s.alpha(20) == dps::expanders::exponential(Rat(2), 20));
    const auto blocks = dps::F_hypergeom_rep(s);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].numerator_params.empty());
    CHECK(blocks[0].denominator_params == std::vector<Rat>{make_rat(3, 2)});
    CHECK(blocks[1].numerator_params == std::vector<Rat>{Rat(1)});
    CHECK(dps::verify_F_rep(s, blocks, 20) == Series::zero(20));
  }
  SUBCASE("cosh and sinh") {
    const Rat a1 = make_rat(3, 5), b1 = Rat(2), b2 = make_rat(1, 7);
    const auto s = spec_of(Rat(1), a1, {b1, b2}, {Rat(0), Rat(0)});
    const auto blocks = dps::F_hypergeom_rep(s);
    const Series odd = dps::hypergeom_series(blocks[0], 21);
    const Series even = dps::hypergeom_series(blocks[1], 21);
    for (std::size_t m = 0; m <= 10; ++m) {
      const Rat p = dps::pow(b1 * b2, static_cast<long>(m));
      CHECK(odd[2 * m + 1] == a1 / b2 * b2 * p / oracle::fact(2 * m + 1));
      CHECK(odd[2 * m] == 0);
      if (m >= 1) CHECK(even[2 * m] == a1 / b2 * p / oracle::fact(2 * m));
    }
  }
  SUBCASE("binomial") {
    const Rat lambda = make_rat(-5, 2);
    const auto s = spec_of(Rat(1), lambda, {lambda + 1}, {Rat(1)});
    CHECK(s.alpha(15) == dps::expanders::binomial(Rat(1), lambda, 15));
    CHECK(dps::verify_F_rep(s, dps::F_hypergeom_rep(s), 15) == Series::zero(15));
    const auto alt = dps::F_alternative_rep(s);
    REQUIRE(alt.has_value());
    CHECK(dps::verify_F_rep(s, *alt, 15) == Series::zero(15));
  }
  SUBCASE("logarithm") {
    const auto s = spec_of(Rat(1), Rat(1), {Rat(1)}, {Rat(1)});
    CHECK(s.alpha(15) == Series::one(15) + dps::expanders::mercator(Rat(1), 15));
    CHECK(dps::verify_F_rep(s, dps::F_hypergeom_rep(s), 15) == Series::zero(15));
    CHECK_FALSE(dps::F_alternative_rep(s).has_value());
  }
}

TEST_CASE("F blocks are exact for every pattern of vanishing beta") {
  oracle::RandomRat rnd(29);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      CAPTURE(d);
      CAPTURE(mask);
      const auto s = random_spec(rnd, d, mask);
      CHECK(is_zero_series(dps::verify_F_rep(s, dps::F_hypergeom_rep(s), 40)));
      const auto alt = dps::F_alternative_rep(s);
      CHECK(alt.has_value() == (s.bseq.tilde_beta_d() != 0));
      if (alt) CHECK(is_zero_series(dps::verify_F_rep(s, *alt, 40)));
    }
  }
}

TEST_CASE("a wrong block is detected") {
  const auto s = spec_of(Rat(1), Rat(2), {Rat(3), make_rat(1, 2)}, {Rat(1), Rat(2)});
  auto blocks = dps::F_hypergeom_rep(s);
  blocks[1].denominator_params[0] += 1;
  const Series diff = dps::verify_F_rep(s, blocks, 12);
  CHECK_FALSE(is_zero_series(diff));
}

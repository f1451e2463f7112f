#include <doctest.h>

#include "dps/error.hpp"
#include "dps/families.hpp"
#include "dps/genfun.hpp"
#include "oracle/oracle.hpp"

using dps::Errc;
using dps::Error;
using dps::make_rat;
using dps::Rat;
using dps::Series;
using dps::XPoly;

namespace {

Series exp_alpha(std::size_t order) { return dps::expanders::exponential(Rat(1), order); }

XPoly poly(std::initializer_list<Rat> c) { return XPoly(std::vector<Rat>(c)); }

struct Case {
  const char* kind;
  dps::Params params;
};

const std::vector<Case>& all_families() {
  static const std::vector<Case> cases{
      {"monomials", {}},
      {"appell", {{"d", 3}, {"r2", make_rat(1, 2)}, {"r3", Rat(-2)}, {"r4", Rat(1)}}},
      {"hermite_gould_hopper", {{"d", 2}, {"beta", make_rat(3, 2)}, {"alpha1", make_rat(2, 5)}}},
      {"humbert", {{"d", 2}, {"alpha", Rat(1)}, {"beta", make_rat(1, 2)}, {"alpha1", make_rat(1, 2)}}},
      {"humbert", {{"d", 3}, {"alpha", make_rat(2, 3)}, {"beta", Rat(5)}}},
      {"chebyshev_dops", {{"d", 3}, {"alpha", Rat(2)}, {"alpha1", make_rat(1, 3)}}},
      {"d1_ultraspherical", {{"beta1", Rat(2)}, {"tilde_beta1", make_rat(3, 4)}}},
      {"d1_chebyshev1", {{"beta1", make_rat(1, 2)}}},
      {"d1_hermite", {{"b1", Rat(3)}, {"T1", Rat(2)}}},
      {"b_linear", {{"d", 2}, {"b1", Rat(2)}, {"b2", make_rat(1, 3)}, {"beta1", Rat(1)}, {"beta2", Rat(3)}}},
  };
  return cases;
}

}  // namespace

TEST_CASE("constant alpha and zero R give the monomials") {
  const auto spec = dps::make_gen_spec(Series(std::vector<Rat>(9, Rat(1))), Series::zero(8), 8);
  const auto ps = dps::expand_ps(spec);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(ps[n] == XPoly::monomial(Rat(1), n));
}

TEST_CASE("exp(xt - t^2/2) gives the Hermite polynomials") {
  const auto spec = dps::make_gen_spec(exp_alpha(5), Series::monomial(make_rat(1, 2), 2, 5), 5);
  const auto ps = dps::expand_ps(spec);
  CHECK(ps[2] == poly({-1, 0, 1}));
  CHECK(ps[3] == poly({0, -3, 0, 1}));
  CHECK(ps[5] == poly({0, 15, 0, -10, 0, 1}));
}

TEST_CASE("exp(xt - t^3/3) matches the binomial-theorem oracle") {
  const std::size_t order = 8;
  const Series alpha = exp_alpha(order);
  const Series r = Series::monomial(make_rat(1, 3), 3, order);
  const auto ps = dps::expand_ps(dps::make_gen_spec(alpha, r, order));
  const auto ref = oracle::expand_direct({alpha.coeffs().begin(), alpha.coeffs().end()},
                                         {r.coeffs().begin(), r.coeffs().end()}, order);
  for (std::size_t n = 0; n <= order; ++n) CHECK(ps[n] == dps::scale(XPoly(ref[n]), Rat(1) / alpha[n]));
  // Hand values confirmed by the oracle above.
  CHECK(ps[3] == poly({-2, 0, 0, 1}));
  CHECK(ps[4] == poly({0, -8, 0, 0, 1}));
}

TEST_CASE("every family expands to the oracle's monic polynomials") {
  for (const auto& c : all_families()) {
    CAPTURE(c.kind);
    const auto fam = dps::make_family(c.kind, c.params, 12);
    const auto ps = dps::expand_ps(fam.gen);
    const auto& a = fam.gen.alpha;
    const auto ref = oracle::expand_direct({a.coeffs().begin(), a.coeffs().end()},
                                           {fam.gen.r.coeffs().begin(), fam.gen.r.coeffs().end()}, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      CAPTURE(n);
      CHECK(ps[n].degree() == n);
      CHECK(ps[n].leading() == 1);
      CHECK(ps[n] == dps::scale(XPoly(ref[n]), Rat(1) / a[n]));
    }
  }
}

TEST_CASE("specs violating the hypotheses are rejected with the offending index") {
  std::vector<Rat> a(6, Rat(1));
  a[3] = 0;
  try {
    dps::make_gen_spec(Series(a), Series::zero(5), 5);
    FAIL("expected ZeroAlpha");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_alpha);
    CHECK(e.index() == 3u);
  }
  std::vector<Rat> a0(6, Rat(1));
  a0[0] = 2;
  CHECK_THROWS_AS(dps::make_gen_spec(Series(a0), Series::zero(5), 5), Error);

  std::vector<Rat> r(6);
  r[1] = 1;
  try {
    dps::make_gen_spec(Series(std::vector<Rat>(6, Rat(1))), Series(r), 5);
    FAIL("expected MalformedR");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_r);
    CHECK(e.index() == 1u);
  }
  try {
    dps::make_gen_spec(Series(std::vector<Rat>(4, Rat(1))), Series::zero(5), 5);
    FAIL("expected Truncation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::truncation);
  }
}

TEST_CASE("the differential identity holds for every family") {
  for (const auto& c : all_families()) {
    CAPTURE(c.kind);
    const auto fam = dps::make_family(c.kind, c.params, 20);
    const auto ps = dps::expand_ps(fam.gen);
    for (std::size_t n = 1; n <= 20; ++n) {
      CAPTURE(n);
      CHECK(dps::gf1_residual(fam.gen, ps, n).is_zero());
    }
  }
}

TEST_CASE("a perturbed polynomial shows up in the differential residual") {
  const auto spec = dps::make_gen_spec(exp_alpha(6), Series::monomial(make_rat(1, 2), 2, 6), 6);
  auto ps = dps::expand_ps(spec);
  CHECK(dps::gf1_residual(spec, ps, 3).is_zero());
  ps.polys[3] += XPoly::constant(Rat(1));
  CHECK(dps::gf1_residual(spec, ps, 3) == XPoly::constant(Rat(-3) * spec.alpha[3]));
  CHECK_THROWS_AS(dps::gf1_residual(spec, ps, 0), Error);
}

TEST_CASE("Appell factor to R") {
  CHECK(dps::appell_r_from_a(Series::one(5)) == Series::zero(5));
  const Series a = dps::series_exp(Series::monomial(make_rat(-1, 3), 3, 9));
  CHECK(dps::appell_r_from_a(a) == Series::monomial(make_rat(1, 3), 3, 9));
  const Series one_minus_t2(std::vector<Rat>{1, 0, -1, 0, 0});
  CHECK(dps::appell_r_from_a(one_minus_t2) == Series(std::vector<Rat>{0, 0, 1, 0, make_rat(1, 2)}));
  CHECK_THROWS_AS(dps::appell_r_from_a(Series(std::vector<Rat>{0, 1})), Error);
}

TEST_CASE("R supported on multiples of d+1 gives the support congruence") {
  for (const auto& c : all_families()) {
    const auto fam = dps::make_family(c.kind, c.params, 15);
    if (!fam.symmetric) continue;
    CAPTURE(c.kind);
    const auto ps = dps::expand_ps(fam.gen);
    const std::size_t step = fam.d + 1;
    for (std::size_t n = 0; n <= 15; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        if ((n - k) % step != 0) CHECK(ps[n].coeff(k) == 0);
      }
    }
  }
}

#include "dps/genfun.hpp"

#include "dps/error.hpp"

namespace dps {

void GenSpec::validate() const {
  if (alpha.order() < order) {
    throw Error(Errc::truncation, "alpha is known only through order " + std::to_string(alpha.order()));
  }
  if (r.order() < order) {
    throw Error(Errc::truncation, "R is known only through order " + std::to_string(r.order()));
  }
  if (alpha[0] != 1) throw Error(Errc::zero_alpha, "alpha_0 must be 1", 0);
  for (std::size_t n = 1; n <= order; ++n) {
    if (is_zero(alpha[n])) throw Error(Errc::zero_alpha, "alpha_" + std::to_string(n) + " is zero", n);
  }
  if (!is_zero(r[0])) throw Error(Errc::malformed_r, "R(t) has a nonzero constant term", 0);
  if (r.order() >= 1 && !is_zero(r[1])) throw Error(Errc::malformed_r, "R(t) has a nonzero linear term", 1);
}

GenSpec make_gen_spec(Series alpha, Series r, std::size_t order) {
  GenSpec spec{std::move(alpha), std::move(r), order};
  spec.validate();
  return spec;
}

PolySet expand_ps(const GenSpec& spec) {
  spec.validate();
  XSeries gf = compose_bivariate(spec.alpha, spec.r, spec.order);
  PolySet ps;
  ps.provenance = "generating function";
  ps.polys.reserve(spec.order + 1);
  for (std::size_t n = 0; n <= spec.order; ++n) {
    XPoly p = scale(gf[n], Rat(1) / spec.alpha[n]);
    if (p.is_zero() || p.degree() != n || p.leading() != 1) {
      throw Error(Errc::not_monic, "P_" + std::to_string(n) + " is not monic of degree " + std::to_string(n), n);
    }
    ps.polys.push_back(std::move(p));
  }
  return ps;
}

XPoly gf1_residual(const GenSpec& spec, const PolySet& ps, std::size_t n) {
  if (n == 0 || n > ps.order() || n > spec.order) {
    throw Error(Errc::truncation, "gf1 residual needs 1 <= n <= N, got n = " + std::to_string(n), n);
  }
  const Rat nn(static_cast<unsigned long>(n));
  XPoly res = scale(mul_x(derivative(ps[n])), spec.alpha[n]);
  res.add_scaled(ps[n], -nn * spec.alpha[n]);
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    const Rat rk = spec.r.r_value(k + 1);
    if (is_zero(rk)) continue;
    res.add_scaled(derivative(ps[n - k]), -rk * spec.alpha[n - k]);
  }
  return res;
}

Series appell_r_from_a(const Series& a) { return -series_log(a); }

}  // namespace dps

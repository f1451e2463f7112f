#include "dps/families.hpp"

#include <algorithm>
#include <set>

#include "dps/error.hpp"

namespace dps {

namespace {

Rat q(std::size_t v) { return Rat(static_cast<unsigned long>(v)); }

}  // namespace

namespace expanders {

Series binomial(const Rat& a, const Rat& lambda, std::size_t order) {
  std::vector<Rat> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 0; n < order; ++n) c[n + 1] = c[n] * a * (lambda + q(n)) / q(n + 1);
  return Series(std::move(c));
}

Series mercator(const Rat& a, std::size_t order) {
  std::vector<Rat> c(order + 1);
  Rat p(1);
  for (std::size_t n = 1; n <= order; ++n) {
    p *= a;
    c[n] = p / q(n);
  }
  return Series(std::move(c));
}

Series exponential(const Rat& a, std::size_t order) {
  std::vector<Rat> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) c[n] = c[n - 1] * a / q(n);
  return Series(std::move(c));
}

}  // namespace expanders

namespace {

// Reads family parameters and rejects keys nobody asked for.
class ParamReader {
 public:
  ParamReader(std::string family, const Params& params) : family_(std::move(family)), params_(params) {}

  Rat get(const std::string& key, const std::optional<Rat>& fallback = std::nullopt) {
    seen_.insert(key);
    auto it = params_.find(key);
    if (it != params_.end()) return it->second;
    if (!fallback) throw Error(Errc::invalid_params, family_ + " needs parameter '" + key + "'");
    return *fallback;
  }

  bool has(const std::string& key) const { return params_.count(key) != 0; }

  std::size_t get_order(const std::string& key, std::size_t fallback, std::size_t min_value) {
    const Rat v = get(key, Rat(static_cast<unsigned long>(fallback)));
    if (!is_integer(v) || v < static_cast<unsigned long>(min_value) || v > 64) {
      throw Error(Errc::invalid_params, family_ + ": '" + key + "' must be an integer in [" +
                                            std::to_string(min_value) + ", 64]");
    }
    return v.get_num().get_ui();
  }

  void nonzero(const std::string& key, const Rat& v) const {
    if (is_zero(v)) throw Error(Errc::invalid_params, family_ + ": '" + key + "' must be nonzero");
  }

  void finish() const {
    for (const auto& [key, value] : params_) {
      if (!seen_.count(key)) throw Error(Errc::invalid_params, family_ + " has no parameter '" + key + "'");
    }
  }

 private:
  std::string family_;
  const Params& params_;
  std::set<std::string> seen_;
};

// 1 + k (s - s(0)).
Series one_plus(const Rat& k, const Series& s) {
  std::vector<Rat> c(s.coeffs().begin(), s.coeffs().end());
  for (auto& x : c) x *= k;
  c[0] = 1;
  return Series(std::move(c));
}

Series symmetric_r(const Rat& t1, std::size_t d, std::size_t order) {
  return Series::monomial(t1 / q(d + 1), d + 1, order);
}

BSequence uniform_bseq(const Rat& b0, std::size_t d, const std::function<Rat(std::size_t)>& b_at, const Rat& beta) {
  std::vector<Rat> base(d);
  for (std::size_t r = 1; r <= d; ++r) base[r - 1] = b_at(r);
  return BSequence(b0, std::move(base), std::vector<Rat>(d, beta));
}

// gamma_n^l = value(n) on column d for n >= d, zero elsewhere.
std::function<Rat(std::size_t, std::size_t)> column(std::size_t d, std::function<Rat(std::size_t)> value) {
  return [d, value = std::move(value)](std::size_t n, std::size_t l) -> Rat {
    if (l != d || n < d) return Rat(0);
    return value(n);
  };
}

Rat falling(std::size_t n, std::size_t k) {
  Rat p(1);
  for (std::size_t j = 0; j < k; ++j) p *= q(n - j);
  return p;
}

void reject_nonpositive_integer(const std::string& family, const Rat& lambda) {
  if (is_integer(lambda) && lambda <= 0) {
    throw Error(Errc::invalid_params, family + ": beta/alpha = " + to_display(lambda) +
                                          " is a nonpositive integer, so alpha_n vanishes");
  }
}

FamilySpec monomials(ParamReader& p, std::size_t order) {
  p.finish();
  FamilySpec f;
  f.name = "monomials";
  f.d = 0;
  f.gen = make_gen_spec(Series(std::vector<Rat>(order + 1, Rat(1))), Series::zero(order), order);
  f.expected_gamma = [](std::size_t, std::size_t) { return Rat(0); };
  f.notes = "F(t) = 1/(1-t), R = 0; P_n = x^n";
  return f;
}

FamilySpec appell(ParamReader& p, std::size_t order) {
  const std::size_t d = p.get_order("d", 1, 1);
  std::vector<Rat> rv(d + 2);
  for (std::size_t k = 2; k <= d + 1; ++k) rv[k] = p.get("r" + std::to_string(k), Rat(k == d + 1 ? 1 : 0));
  p.nonzero("r" + std::to_string(d + 1), rv[d + 1]);
  p.finish();
  FamilySpec f;
  f.name = "appell";
  f.d = d;
  f.gen = make_gen_spec(expanders::exponential(Rat(1), order), Series::from_r_values(rv, order), order);
  f.expected_gamma = [rv](std::size_t n, std::size_t l) -> Rat {
    if (l == 0 || l + 1 >= rv.size() || l > n) return Rat(0);
    return rv[l + 1] * falling(n, l);
  };
  bool single = true;
  for (std::size_t k = 2; k <= d; ++k) single = single && is_zero(rv[k]);
  if (single) f.symmetric = SymmetricSpec{rv[d + 1], uniform_bseq(Rat(1), d, [](std::size_t) { return Rat(1); }, Rat(0))};
  f.notes = "F(t) = exp(t), R = sum_{k=2}^{d+1} r_k t^k / k";
  return f;
}

FamilySpec hermite_gould_hopper(ParamReader& p, std::size_t order) {
  const std::size_t d = p.get_order("d", 1, 1);
  const Rat beta = p.get("beta", Rat(1));
  const Rat alpha1 = p.get("alpha1", Rat(1));
  const Rat t1 = p.get("T1", Rat(1));
  p.nonzero("beta", beta);
  p.nonzero("alpha1", alpha1);
  p.nonzero("T1", t1);
  p.finish();
  FamilySpec f;
  f.name = "hermite_gould_hopper";
  f.d = d;
  f.gen = make_gen_spec(one_plus(alpha1 / beta, expanders::exponential(beta, order)), symmetric_r(t1, d, order), order);
  const Rat scale = t1 * pow(beta, -static_cast<long>(d));
  f.expected_gamma = column(d, [scale, d](std::size_t n) -> Rat { return scale * falling(n, d); });
  f.symmetric = SymmetricSpec{t1, uniform_bseq(alpha1, d, [&](std::size_t) -> Rat { return beta; }, Rat(0))};
  f.notes = "F(t) = 1 + (alpha1/beta)(exp(beta t) - 1), R = T1 t^{d+1}/(d+1)";
  return f;
}

FamilySpec humbert(ParamReader& p, std::size_t order) {
  const std::size_t d = p.get_order("d", 2, 1);
  const Rat a = p.get("alpha", Rat(1));
  const Rat b = p.get("beta", Rat(1));
  const Rat alpha1 = p.get("alpha1", Rat(1));
  p.nonzero("alpha", a);
  p.nonzero("beta", b);
  p.nonzero("alpha1", alpha1);
  const Rat t1 = p.get("T1", pow(a, static_cast<long>(d + 1)) * pow(q(d + 1), -static_cast<long>(d)));
  p.nonzero("T1", t1);
  p.finish();
  const Rat lambda = b / a;
  reject_nonpositive_integer("humbert", lambda);
  FamilySpec f;
  f.name = "humbert";
  f.d = d;
  f.gen = make_gen_spec(one_plus(alpha1 / b, expanders::binomial(a, lambda, order)), symmetric_r(t1, d, order), order);
  const Rat scale = t1 * pow(a, -static_cast<long>(d) - 1) / q(d + 1);
  f.expected_gamma = column(d, [=](std::size_t n) -> Rat {
    return scale * falling(n, d) * (a * q(n - d) + q(d + 1) * b) / pochhammer(q(n - d) + lambda, d + 1);
  });
  f.symmetric = SymmetricSpec{t1, uniform_bseq(alpha1, d, [&](std::size_t r) -> Rat { return a * q(r) + b; }, a * q(d))};
  f.notes = "F(t) = 1 + (alpha1/beta)((1 - alpha t)^{-beta/alpha} - 1), R = T1 t^{d+1}/(d+1)";
  return f;
}

FamilySpec chebyshev_dops(ParamReader& p, std::size_t order) {
  const std::size_t d = p.get_order("d", 2, 1);
  const Rat a = p.get("alpha", Rat(1));
  const Rat alpha1 = p.get("alpha1", Rat(1));
  p.nonzero("alpha", a);
  p.nonzero("alpha1", alpha1);
  if (p.has("b") && p.has("T1")) throw Error(Errc::invalid_params, "chebyshev_dops takes either 'b' or 'T1'");
  Rat t1;
  if (p.has("b")) {
    t1 = p.get("b") * q(d + 1) * pow(a, static_cast<long>(d));
  } else {
    t1 = p.get("T1", Rat(1));
  }
  p.nonzero("T1", t1);
  p.finish();
  FamilySpec f;
  f.name = "chebyshev_dops";
  f.d = d;
  f.gen = make_gen_spec(one_plus(alpha1 / a, expanders::mercator(a, order)), symmetric_r(t1, d, order), order);
  const Rat top = t1 * pow(a, -static_cast<long>(d));
  f.expected_gamma = column(d, [=](std::size_t n) -> Rat { return n == d ? top : Rat(top / q(d + 1)); });
  f.symmetric = SymmetricSpec{t1, uniform_bseq(alpha1, d, [&](std::size_t r) -> Rat { return a * q(r); }, a * q(d))};
  f.notes = "F(t) = 1 - (alpha1/alpha) log(1 - alpha t), R = T1 t^{d+1}/(d+1)";
  return f;
}

FamilySpec d1_ultraspherical(ParamReader& p, std::size_t order) {
  const Rat beta1 = p.get("beta1", Rat(1));
  const Rat tb = p.get("tilde_beta1", Rat(1));
  const Rat alpha1 = p.get("alpha1", Rat(1));
  const Rat t1 = p.get("T1", Rat(1));
  p.nonzero("beta1", beta1);
  p.nonzero("tilde_beta1", tb);
  p.nonzero("alpha1", alpha1);
  p.nonzero("T1", t1);
  p.finish();
  reject_nonpositive_integer("d1_ultraspherical", tb / beta1);
  FamilySpec f;
  f.name = "d1_ultraspherical";
  f.d = 1;
  f.gen = make_gen_spec(one_plus(alpha1 / tb, expanders::binomial(beta1, tb / beta1, order)), symmetric_r(t1, 1, order),
                        order);
  f.expected_gamma = column(1, [=](std::size_t n) -> Rat {
    const Rat nn = q(n);
    return t1 / 2 * nn * (beta1 * (nn - 1) + 2 * tb) / ((beta1 * nn + tb) * (beta1 * (nn - 1) + tb));
  });
  f.symmetric = SymmetricSpec{t1, BSequence(alpha1, {beta1 + tb}, {beta1})};
  f.notes = "F(t) = 1 + (alpha1/tilde_beta1)((1 - beta1 t)^{-tilde_beta1/beta1} - 1), R = T1 t^2/2";
  return f;
}

FamilySpec d1_chebyshev1(ParamReader& p, std::size_t order) {
  const Rat beta1 = p.get("beta1", Rat(1));
  const Rat alpha1 = p.get("alpha1", Rat(1));
  const Rat t1 = p.get("T1", Rat(1));
  p.nonzero("beta1", beta1);
  p.nonzero("alpha1", alpha1);
  p.nonzero("T1", t1);
  p.finish();
  FamilySpec f;
  f.name = "d1_chebyshev1";
  f.d = 1;
  f.gen = make_gen_spec(one_plus(alpha1 / beta1, expanders::mercator(beta1, order)), symmetric_r(t1, 1, order), order);
  f.expected_gamma = column(1, [=](std::size_t n) -> Rat { return n == 1 ? Rat(t1 / beta1) : Rat(t1 / (2 * beta1)); });
  f.symmetric = SymmetricSpec{t1, BSequence(alpha1, {beta1}, {beta1})};
  f.notes = "F(t) = 1 - (alpha1/beta1) log(1 - beta1 t), R = T1 t^2/2";
  return f;
}

FamilySpec d1_hermite(ParamReader& p, std::size_t order) {
  const Rat b1 = p.get("b1", Rat(1));
  const Rat alpha1 = p.get("alpha1", Rat(1));
  const Rat t1 = p.get("T1", Rat(1));
  p.nonzero("b1", b1);
  p.nonzero("alpha1", alpha1);
  p.nonzero("T1", t1);
  p.finish();
  FamilySpec f;
  f.name = "d1_hermite";
  f.d = 1;
  f.gen = make_gen_spec(one_plus(alpha1 / b1, expanders::exponential(b1, order)), symmetric_r(t1, 1, order), order);
  f.expected_gamma = column(1, [=](std::size_t n) -> Rat { return t1 * q(n) / b1; });
  f.symmetric = SymmetricSpec{t1, BSequence(alpha1, {b1}, {Rat(0)})};
  f.notes = "F(t) = 1 + (alpha1/b1)(exp(b1 t) - 1), R = T1 t^2/2";
  return f;
}

FamilySpec b_linear(ParamReader& p, std::size_t order) {
  const std::size_t d = p.get_order("d", 2, 1);
  const Rat t1 = p.get("T1", Rat(1));
  const Rat b0 = p.get("b0", Rat(1));
  std::vector<Rat> base(d), beta(d);
  for (std::size_t r = 1; r <= d; ++r) {
    base[r - 1] = p.get("b" + std::to_string(r), Rat(1));
    beta[r - 1] = p.get("beta" + std::to_string(r), Rat(0));
  }
  p.nonzero("T1", t1);
  p.finish();
  SymmetricSpec sym{t1, BSequence(b0, std::move(base), std::move(beta))};
  for (std::size_t l = 0; l < order; ++l) {
    if (is_zero(sym.bseq.b(l))) {
      throw Error(Errc::invalid_params, "b_linear: b_" + std::to_string(l) + " = 0 makes alpha vanish", l);
    }
  }
  FamilySpec f;
  f.name = "b_linear";
  f.d = d;
  f.gen = sym.to_gen_spec(order);
  f.expected_gamma = column(d, [sym](std::size_t n) { return gamma_from_alpha_ratios(sym, n); });
  f.symmetric = std::move(sym);
  f.notes = "alpha_n = prod_{l<n} b_l / n! with b_{md+r} = beta_r m + b_r, R = T1 t^{d+1}/(d+1)";
  return f;
}

using Builder = FamilySpec (*)(ParamReader&, std::size_t);

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table{
      {"monomials", monomials},
      {"appell", appell},
      {"hermite_gould_hopper", hermite_gould_hopper},
      {"humbert", humbert},
      {"chebyshev_dops", chebyshev_dops},
      {"d1_ultraspherical", d1_ultraspherical},
      {"d1_chebyshev1", d1_chebyshev1},
      {"d1_hermite", d1_hermite},
      {"b_linear", b_linear},
  };
  return table;
}

}  // namespace

FamilySpec make_family(const std::string& kind, const Params& params, std::size_t order) {
  const auto& table = builders();
  auto it = table.find(kind);
  if (it == table.end()) throw Error(Errc::invalid_params, "unknown family '" + kind + "'");
  if (order == 0) throw Error(Errc::invalid_params, "order must be at least 1");
  ParamReader reader(kind, params);
  return it->second(reader, order);
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog{
      {"monomials", "", "P_n = x^n (alpha_n = 1, R = 0)"},
      {"appell", "d=1, r2..r{d+1}", "F = exp, R = sum r_k t^k / k"},
      {"hermite_gould_hopper", "d=1, beta=1, alpha1=1, T1=1", "F = 1 + (alpha1/beta)(exp(beta t) - 1)"},
      {"humbert", "d=2, alpha=1, beta=1, alpha1=1, T1=alpha^{d+1}(d+1)^{-d}",
       "F = 1 + (alpha1/beta)((1 - alpha t)^{-beta/alpha} - 1)"},
      {"chebyshev_dops", "d=2, alpha=1, alpha1=1, T1=1 | b", "F = 1 - (alpha1/alpha) log(1 - alpha t)"},
      {"d1_ultraspherical", "beta1=1, tilde_beta1=1, alpha1=1, T1=1",
       "F = 1 + (alpha1/tilde_beta1)((1 - beta1 t)^{-tilde_beta1/beta1} - 1)"},
      {"d1_chebyshev1", "beta1=1, alpha1=1, T1=1", "F = 1 - (alpha1/beta1) log(1 - beta1 t)"},
      {"d1_hermite", "b1=1, alpha1=1, T1=1", "F = 1 + (alpha1/b1)(exp(b1 t) - 1)"},
      {"b_linear", "d=2, T1=1, b0=1, b1..bd=1, beta1..betad=0", "alpha_n = prod b_l / n!, b_{md+r} = beta_r m + b_r"},
  };
  return catalog;
}

std::vector<std::string> family_names() {
  std::vector<std::string> names;
  for (const auto& info : family_catalog()) names.push_back(info.name);
  return names;
}

Params parse_params(const std::string& text) {
  Params out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(Errc::schema, "parameter '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    if (!out.emplace(key, parse_rat(item.substr(eq + 1))).second) {
      throw Error(Errc::schema, "parameter '" + key + "' given twice");
    }
    pos = end + 1;
  }
  return out;
}

// --------------------------------------------------------------- Chebyshev

PolySet chebyshev_dd1(std::size_t d, const Rat& b, std::size_t order) {
  PolySet ps;
  ps.provenance = "chebyshev recurrence";
  for (std::size_t n = 0; n <= order; ++n) {
    if (n <= d) {
      ps.polys.push_back(XPoly::monomial(Rat(1), n));
    } else if (n == d + 1) {
      ps.polys.push_back(mul_x(ps[d]) - XPoly::constant(q(d + 1) * b));
    } else {
      XPoly next = mul_x(ps[n - 1]);
      next.add_scaled(ps[n - d - 1], -b);
      ps.polys.push_back(std::move(next));
    }
  }
  return ps;
}

XSeries chebyshev_rational_gf(std::size_t d, const Rat& b, std::size_t order) {
  // (1 - x t + b t^{d+1}) G = 1 - d b t^{d+1}.
  XSeries g;
  for (std::size_t n = 0; n <= order; ++n) {
    XPoly c;
    if (n == 0) c = XPoly::constant(Rat(1));
    if (n == d + 1) c.add_scaled(XPoly::constant(Rat(1)), -q(d) * b);
    if (n >= 1) c += mul_x(g.coeffs[n - 1]);
    if (n >= d + 1) c.add_scaled(g.coeffs[n - d - 1], -b);
    g.coeffs.push_back(std::move(c));
  }
  return g;
}

bool ChebyConsistency::all_zero() const {
  auto zero = [](const XPoly& p) { return p.is_zero(); };
  return std::all_of(recurrence_vs_rational.begin(), recurrence_vs_rational.end(), zero) &&
         std::all_of(recurrence_vs_log.begin(), recurrence_vs_log.end(), zero);
}

ChebyConsistency cheby_consistency(std::size_t d, const Rat& b, std::size_t order) {
  if (is_zero(b)) throw Error(Errc::invalid_params, "the Chebyshev parameter b must be nonzero");
  const PolySet rec = chebyshev_dd1(d, b, order);
  const XSeries rational = chebyshev_rational_gf(d, b, order);
  // 1 - log(1 - x t + b t^{d+1}) = 1 + sum P_n t^n / n.
  const Series f = one_plus(Rat(1), expanders::mercator(Rat(1), order));
  const XSeries log_gf = compose_bivariate(f, Series::monomial(b, d + 1, order), order);
  ChebyConsistency out;
  for (std::size_t n = 0; n <= order; ++n) {
    out.recurrence_vs_rational.push_back(rec[n] - rational[n]);
    const XPoly from_log = n == 0 ? log_gf[0] : scale(log_gf[n], q(n));
    out.recurrence_vs_log.push_back(rec[n] - from_log);
  }
  return out;
}

}  // namespace dps

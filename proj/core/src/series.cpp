#include "dps/series.hpp"

#include <algorithm>
#include <sstream>

#include "dps/error.hpp"

namespace dps {

// ---------------------------------------------------------------- Series

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::schema, "a series needs at least one coefficient");
}

Series Series::zero(std::size_t order) { return Series(std::vector<Rat>(order + 1)); }

Series Series::one(std::size_t order) {
  std::vector<Rat> c(order + 1);
  c[0] = 1;
  return Series(std::move(c));
}

Series Series::monomial(const Rat& coeff, std::size_t power, std::size_t order) {
  std::vector<Rat> c(order + 1);
  if (power <= order) c[power] = coeff;
  return Series(std::move(c));
}

Series Series::from_r_values(std::span<const Rat> r_values, std::size_t order) {
  std::vector<Rat> c(order + 1);
  for (std::size_t k = 1; k < r_values.size() && k <= order; ++k) {
    c[k] = r_values[k] / Rat(static_cast<unsigned long>(k));
  }
  if (!r_values.empty() && !is_zero(r_values[0])) {
    throw Error(Errc::malformed_r, "R_0 must be zero");
  }
  return Series(std::move(c));
}

Rat Series::r_value(std::size_t n) const {
  if (n > order()) {
    throw Error(Errc::truncation,
                "R_" + std::to_string(n) + " lies beyond the series order " + std::to_string(order()), n);
  }
  return Rat(static_cast<unsigned long>(n)) * coeffs_[n];
}

Series Series::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return Series(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

Series operator+(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rat> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rat> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return Series(std::move(c));
}

Series operator-(const Series& a) { return scale(a, Rat(-1)); }

Series operator*(const Series& a, const Series& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Rat> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return Series(std::move(c));
}

Series scale(const Series& a, const Rat& k) {
  std::vector<Rat> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= k;
  return Series(std::move(c));
}

// E' = u' E gives n e_n = sum_{k=1}^{n} k u_k e_{n-k}.
Series series_exp(const Series& u) {
  if (!is_zero(u[0])) throw Error(Errc::bad_constant_term, "exp needs u(0) = 0");
  const std::size_t n = u.order();
  std::vector<Rat> e(n + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rat acc;
    for (std::size_t k = 1; k <= m; ++k) {
      if (!is_zero(u[k])) acc += Rat(static_cast<unsigned long>(k)) * u[k] * e[m - k];
    }
    e[m] = acc / Rat(static_cast<unsigned long>(m));
  }
  return Series(std::move(e));
}

// A' = L' A gives n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}.
Series series_log(const Series& a) {
  if (a[0] != 1) throw Error(Errc::bad_constant_term, "log needs A(0) = 1");
  const std::size_t n = a.order();
  std::vector<Rat> l(n + 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Rat acc = Rat(static_cast<unsigned long>(m)) * a[m];
    for (std::size_t k = 1; k < m; ++k) {
      if (!is_zero(a[m - k])) acc -= Rat(static_cast<unsigned long>(k)) * l[k] * a[m - k];
    }
    l[m] = acc / Rat(static_cast<unsigned long>(m));
  }
  return Series(std::move(l));
}

// ----------------------------------------------------------------- XPoly

XPoly::XPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::constant(const Rat& c) { return XPoly(std::vector<Rat>{c}); }

XPoly XPoly::monomial(const Rat& c, std::size_t power) {
  std::vector<Rat> v(power + 1);
  v[power] = c;
  return XPoly(std::move(v));
}

void XPoly::trim() {
  while (!coeffs_.empty() && dps::is_zero(coeffs_.back())) coeffs_.pop_back();
}

XPoly& XPoly::operator+=(const XPoly& other) { return add_scaled(other, Rat(1)); }
XPoly& XPoly::operator-=(const XPoly& other) { return add_scaled(other, Rat(-1)); }

XPoly& XPoly::add_scaled(const XPoly& other, const Rat& k) {
  if (dps::is_zero(k) || other.is_zero()) return *this;
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += k * other.coeffs_[i];
  trim();
  return *this;
}

XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

XPoly operator*(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.degree() + b.degree() + 1);
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    if (is_zero(a.coeff(i))) continue;
    for (std::size_t j = 0; j <= b.degree(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return XPoly(std::move(c));
}

XPoly scale(const XPoly& a, const Rat& k) {
  std::vector<Rat> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= k;
  return XPoly(std::move(c));
}

XPoly mul_x(const XPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Rat> c(p.degree() + 2);
  std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + 1);
  return XPoly(std::move(c));
}

XPoly derivative(const XPoly& p) {
  if (p.degree() == 0) return {};
  std::vector<Rat> c(p.degree());
  for (std::size_t k = 1; k <= p.degree(); ++k) c[k - 1] = Rat(static_cast<unsigned long>(k)) * p.coeffs()[k];
  return XPoly(std::move(c));
}

std::string to_display(const XPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.degree() + 1; i-- > 0;) {
    const Rat& c = p.coeffs()[i];
    if (is_zero(c)) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      os << to_display(mag);
      continue;
    }
    if (!unit) os << to_display(mag) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ----------------------------------------------------- compose_bivariate

XSeries compose_bivariate(const Series& f, const Series& r, std::size_t order) {
  if (!is_zero(r[0]) || (r.order() >= 1 && !is_zero(r[1]))) {
    throw Error(Errc::malformed_r, "R(t) must have zero constant and linear coefficients",
                is_zero(r[0]) ? 1 : 0);
  }
  if (f.order() < order || r.order() < order) {
    throw Error(Errc::truncation, "F and R must be known through order " + std::to_string(order));
  }

  // Horner: acc_k = alpha_k + u * acc_{k+1}. u has t-valuation 1, so acc_k is
  // only needed through t^{order-k}.
  std::vector<XPoly> acc{XPoly::constant(f[order])};
  for (std::size_t k = order; k-- > 0;) {
    const std::size_t len = order - k + 1;
    std::vector<XPoly> next(len);
    for (std::size_t n = 1; n < len; ++n) {
      // x t * acc
      if (n - 1 < acc.size()) next[n] = mul_x(acc[n - 1]);
      // - R(t) * acc, R starts at t^2
      for (std::size_t m = 0; m + 2 <= n && m < acc.size(); ++m) {
        const Rat& rc = r[n - m];
        if (!is_zero(rc)) next[n].add_scaled(acc[m], -rc);
      }
    }
    next[0] += XPoly::constant(f[k]);
    acc = std::move(next);
  }
  return XSeries{std::move(acc)};
}

}  // namespace dps

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dps/rational.hpp"

namespace dps {

/// Truncated univariate power series sum_{n<=order} c_n t^n.
///
/// The order is part of the value: coefficients beyond it are unknown, not
/// zero, and binary operations return the smaller order of their operands.
class Series {
 public:
  /// The zero series of order 0.
  Series() : coeffs_(1) {}
  /// Takes ownership of c_0..c_N; N = coeffs.size() - 1. Empty input is rejected.
  explicit Series(std::vector<Rat> coeffs);

  static Series zero(std::size_t order);
  static Series one(std::size_t order);
  static Series monomial(const Rat& coeff, std::size_t power, std::size_t order);

  /// R(t) = sum R_k t^k / k built from the R_k convention (r_values[k] = R_k,
  /// r_values[0] is ignored and must be zero).
  static Series from_r_values(std::span<const Rat> r_values, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rat& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const Rat> coeffs() const { return coeffs_; }

  /// R_n = n [t^n] R, the coefficient convention of R(t) = sum R_n t^n / n.
  Rat r_value(std::size_t n) const;

  /// Drops coefficients above `order`; never extends.
  Series truncated(std::size_t order) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Rat> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
/// Cauchy product truncated to min(a.order(), b.order()).
Series operator*(const Series& a, const Series& b);
Series scale(const Series& a, const Rat& k);

/// exp(u) for u(0) = 0. Throws Error{bad_constant_term} otherwise.
Series series_exp(const Series& u);
/// log(A) for A(0) = 1. Throws Error{bad_constant_term} otherwise.
Series series_log(const Series& a);

/// Dense polynomial in x with exact coefficients; trailing zeros trimmed.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<Rat> coeffs);

  static XPoly constant(const Rat& c);
  static XPoly monomial(const Rat& c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; 0 for the zero polynomial (check is_zero() first).
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// [x^k]; zero beyond the degree.
  Rat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  const Rat& leading() const { return coeffs_.back(); }
  std::span<const Rat> coeffs() const { return coeffs_; }

  XPoly& operator+=(const XPoly& other);
  XPoly& operator-=(const XPoly& other);
  /// this += k * other, the inner loop of every back-substitution here.
  XPoly& add_scaled(const XPoly& other, const Rat& k);

  friend bool operator==(const XPoly&, const XPoly&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

XPoly operator+(XPoly a, const XPoly& b);
XPoly operator-(XPoly a, const XPoly& b);
XPoly operator*(const XPoly& a, const XPoly& b);
XPoly scale(const XPoly& a, const Rat& k);
/// x * p(x).
XPoly mul_x(const XPoly& p);
XPoly derivative(const XPoly& p);

/// Human-readable form such as "x^3 - 3*x + 1/2".
std::string to_display(const XPoly& p, const std::string& var = "x");

/// Truncated series in t whose coefficients are polynomials in x.
struct XSeries {
  std::vector<XPoly> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const XPoly& operator[](std::size_t n) const { return coeffs.at(n); }
};

/// F(x t - R(t)) through order N in t, by Horner evaluation of F at
/// u = x t - R(t). Requires R_0 = R_1 = 0 (Error{malformed_r}) and
/// F.order(), R.order() >= N (Error{truncation}).
XSeries compose_bivariate(const Series& f, const Series& r, std::size_t order);

}  // namespace dps

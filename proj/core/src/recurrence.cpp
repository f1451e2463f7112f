#include "dps/recurrence.hpp"

#include <algorithm>

#include "dps/error.hpp"

namespace dps {

namespace {

Rat q(std::size_t v) { return Rat(static_cast<unsigned long>(v)); }
// Ratio (num)/(den) of small nonnegative integers; den > 0 at every call site.
Rat frac(std::size_t num, std::size_t den) { return q(num) / q(den); }

}  // namespace

Rat RecurrenceTable::at(std::size_t n, std::size_t l) const {
  if (l > n) return Rat(0);
  return gamma.at(n).at(l);
}

RecurrenceTable extract_recurrence(const PolySet& ps) {
  RecurrenceTable table;
  const std::size_t rows = ps.order();
  table.gamma.reserve(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    XPoly rem = mul_x(ps[n]) - ps[n + 1];
    std::vector<Rat> row(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
      // P_{n-l} is monic of degree n-l, so its coefficient is read off directly.
      row[l] = rem.coeff(n - l);
      rem.add_scaled(ps[n - l], -row[l]);
    }
    table.gamma.push_back(std::move(row));
  }
  return table;
}

XPoly rebuild_x_pn(const RecurrenceTable& table, const PolySet& ps, std::size_t n) {
  XPoly out = ps[n + 1];
  for (std::size_t l = 0; l <= n; ++l) out.add_scaled(ps[n - l], table.at(n, l));
  return out;
}

OrderVerdict detect_order(const RecurrenceTable& table) {
  OrderVerdict v;
  for (std::size_t n = 0; n < table.rows(); ++n) {
    for (std::size_t l = n + 1; l-- > 0;) {
      if (is_zero(table.gamma[n][l])) continue;
      if (!v.witness_n || l > v.d) {
        v.d = l;
        v.witness_n = n;
      }
      break;
    }
  }
  v.finite = 2 * v.d < table.rows();
  return v;
}

bool is_regular(const RecurrenceTable& table, std::size_t d) {
  for (std::size_t n = d; n < table.rows(); ++n) {
    if (is_zero(table.at(n, d))) return false;
  }
  return true;
}

// ------------------------------------------------------------------ CTable

CTable::CTable(const Series& alpha, const RecurrenceTable& table) {
  const std::size_t rows = std::min(table.rows(), alpha.order());
  a_.reserve(rows);
  c_.reserve(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    if (is_zero(alpha[n + 1]) || is_zero(alpha[n])) {
      throw Error(Errc::zero_alpha, "a_n needs nonzero alpha_n, alpha_{n+1}", is_zero(alpha[n]) ? n : n + 1);
    }
    a_.push_back(alpha[n] / alpha[n + 1]);
    std::vector<Rat> row(n + 1);
    for (std::size_t l = 0; l <= n; ++l) row[l] = alpha[n] / alpha[n - l] * table.gamma[n][l];
    c_.push_back(std::move(row));
  }
}

const Rat& CTable::a(std::size_t n) const {
  if (n >= a_.size()) throw Error(Errc::truncation, "a_" + std::to_string(n) + " is beyond the table", n);
  return a_[n];
}

Rat CTable::c(std::size_t n, std::size_t l) const {
  if (l > n) return Rat(0);
  if (n >= c_.size()) throw Error(Errc::truncation, "c_" + std::to_string(n) + " is beyond the table", n);
  return c_[n][l];
}

// ---------------------------------------------------------- IdentityReport

bool IdentityReport::all_zero() const { return first_failure() == nullptr; }

const IdentityResidual* IdentityReport::first_failure() const {
  for (const auto& e : entries) {
    if (!is_zero(e.residual)) return &e;
  }
  return nullptr;
}

void IdentityReport::append(const IdentityReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

// ------------------------------------------------------------ identities

namespace {

// Shared pieces of the k-th identity at row n. `rv(j)` is R_j.
template <class RValue>
Rat head_term(const CTable& ct, RValue rv, std::size_t k, std::size_t n) {
  // R_{k+1} (a_n - (n-k)/(n-k+1) a_{n-k})
  const Rat rk1 = rv(k + 1);
  if (is_zero(rk1)) return Rat(0);
  return rk1 * (ct.a(n) - frac(n - k, n - k + 1) * ct.a(n - k));
}

template <class RValue>
Rat r_c_sum(const CTable& ct, RValue rv, std::size_t k, std::size_t n, std::size_t l_hi) {
  // sum_{l=1}^{l_hi} R_{k-l} ((n+2)/(n-l+1) c_n^l - (n-k+l+1)/(n-k+l+2) c_{n-k+l+1}^l)
  Rat s;
  for (std::size_t l = 1; l <= l_hi && l < k; ++l) {
    const Rat r = rv(k - l);
    if (is_zero(r)) continue;
    s += r * (frac(n + 2, n - l + 1) * ct.c(n, l) - frac(n - k + l + 1, n - k + l + 2) * ct.c(n - k + l + 1, l));
  }
  return s;
}

Rat c_c_sum(const CTable& ct, std::size_t k, std::size_t n, std::size_t l_lo, std::size_t l_hi) {
  // sum_{l=l_lo}^{l_hi} (l+1)/(n-l+1) c_n^l c_{n-l}^{k-l-1}
  Rat s;
  for (std::size_t l = l_lo; l <= l_hi && l + 1 <= k; ++l) {
    const Rat cn = ct.c(n, l);
    if (is_zero(cn)) continue;
    s += frac(l + 1, n - l + 1) * cn * ct.c(n - l, k - l - 1);
  }
  return s;
}

template <class RValue>
Rat r_r_sum(RValue rv, std::size_t k, std::size_t n, std::size_t l_lo, std::size_t l_hi) {
  // sum_{l=l_lo}^{l_hi} R_{l+1} R_{k-l} / (n-l+1)
  Rat s;
  for (std::size_t l = l_lo; l <= l_hi && l < k; ++l) {
    const Rat r1 = rv(l + 1);
    if (is_zero(r1)) continue;
    s += r1 * rv(k - l) / q(n - l + 1);
  }
  return s;
}

// The k-th identity with every column of the table taken into account:
//   (k+1)/(n-k+1) a_{n-k} c_n^k - head - sum R c + sum c c + sum R R = 0.
// For a d-PS it reduces to each of the band-specific forms.
template <class RValue>
Rat general_identity(const CTable& ct, RValue rv, std::size_t k, std::size_t n) {
  const std::size_t hi = k >= 2 ? k - 2 : 0;
  Rat lhs = frac(k + 1, n - k + 1) * ct.a(n - k) * ct.c(n, k);
  return lhs - head_term(ct, rv, k, n) - r_c_sum(ct, rv, k, n, hi) + c_c_sum(ct, k, n, 1, hi) + r_r_sum(rv, k, n, 1, hi);
}

}  // namespace

IdentityReport verify_prop2(const GenSpec& spec, const RecurrenceTable& table, std::size_t d,
                            std::optional<std::size_t> kmax) {
  IdentityReport report;
  const CTable ct(spec.alpha, table);
  const std::size_t rows = ct.rows();
  auto rv = [&](std::size_t j) { return spec.r.r_value(j); };

  for (std::size_t n = 0; n < rows; ++n) {
    report.entries.push_back({identity::kGamma0, 0, n, table.at(n, 0)});
    for (std::size_t l = d + 1; l <= n; ++l) report.entries.push_back({identity::kOrderBound, l, n, table.at(n, l)});
  }

  std::size_t k_last = kmax.value_or(2 * d + 6);
  if (spec.r.order() >= 1) k_last = std::min(k_last, spec.r.order() - 1);
  if (rows >= 1) k_last = std::min(k_last, rows - 1);

  for (std::size_t k = 1; k <= k_last; ++k) {
    for (std::size_t n = k; n < rows; ++n) {
      Rat res;
      const char* name = nullptr;
      if (k == 1 && d >= 1) {
        name = identity::kFirstColumn;
        res = ct.c(n, 1) - rv(2) / 2 * (q(n) * ct.a(n) / ct.a(n - 1) - q(n - 1));
      } else if (k == 2 && d >= 2) {
        name = identity::kSecondColumn;
        res = ct.c(n, 2) - rv(3) / 3 * (q(n - 1) * ct.a(n) / ct.a(n - 2) - q(n - 2));
      } else if (k <= d) {
        name = identity::kLowBand;
        res = general_identity(ct, rv, k, n);
      } else if (k <= 2 * d + 1) {
        name = identity::kMidBand;
        const std::size_t cc_lo = k - 1 - d;
        res = head_term(ct, rv, k, n) + r_c_sum(ct, rv, k, n, d) - c_c_sum(ct, k, n, cc_lo, d) -
              r_r_sum(rv, k, n, 1, k >= 2 ? k - 2 : 0);
      } else {
        name = identity::kTail;
        res = head_term(ct, rv, k, n) + r_c_sum(ct, rv, k, n, d) - r_r_sum(rv, k, n, 1, k - 2);
      }
      report.entries.push_back({name, k, n, std::move(res)});
    }
  }
  return report;
}

Series recover_r(const Series& alpha, const RecurrenceTable& table, std::size_t kmax) {
  const CTable ct(alpha, table);
  if (kmax > ct.rows()) {
    throw Error(Errc::truncation,
                "recovering R through order " + std::to_string(kmax) + " needs " + std::to_string(kmax) + " rows",
                kmax);
  }
  std::vector<Rat> rvals(kmax + 1);
  auto rv = [&](std::size_t j) -> Rat { return j < rvals.size() ? rvals[j] : Rat(0); };

  for (std::size_t k = 1; k + 1 <= kmax; ++k) {
    // At n = k the head term is R_{k+1} a_k; everything else is known.
    rvals[k + 1] = 0;
    const Rat rest = general_identity(ct, rv, k, k);
    rvals[k + 1] = rest / ct.a(k);
  }
  for (std::size_t k = 1; k + 1 <= kmax; ++k) {
    for (std::size_t n = k + 1; n < ct.rows(); ++n) {
      const Rat res = general_identity(ct, rv, k, n);
      if (!is_zero(res)) {
        throw Error(Errc::inconsistent_table,
                    "identity k=" + std::to_string(k) + " fails at n=" + std::to_string(n) + " (residual " +
                        to_string(res) + ")",
                    n);
      }
    }
  }
  return Series::from_r_values(rvals, kmax);
}

Rat riccati_residual(const CTable& ct, const Rat& r_d1, std::size_t d, std::size_t n) {
  if (n < 2 * d + 1) throw Error(Errc::truncation, "the Riccati identity needs n >= 2d+1", n);
  const Rat cn = ct.c(n, d);
  const Rat cnd = ct.c(n - d, d);
  return r_d1 * (q(n + 2) * cn - q(n - d) * cnd) - q(d + 1) * cn * cnd - r_d1 * r_d1;
}

Rat recursive_system_residual(const CTable& ct, const Series& r, std::size_t d, std::size_t m, std::size_t n) {
  if (m == 0 || m >= d || n < m + d + 1) {
    throw Error(Errc::truncation, "recursive system needs 1 <= m <= d-1 and n >= m+d+1", n);
  }
  auto rv = [&](std::size_t j) { return r.r_value(j); };
  const Rat td = rv(d + 1);
  Rat res = (td * q(n + 2) - q(m + 1) * ct.c(n - m, d)) * ct.c(n, m) / q(n - m + 1) -
            (td * q(n - d) + q(d + 1) * ct.c(n, d)) * ct.c(n - d, m) / q(n - d + 1);
  for (std::size_t l = m + 1; l <= d; ++l) {
    const Rat rl = rv(m + d + 1 - l);
    if (is_zero(rl)) continue;
    res += rl * (frac(n + 2, n - l + 1) * ct.c(n, l) - frac(n - m - d + l, n - m - d + l + 1) * ct.c(n - m - d + l, l));
  }
  for (std::size_t l = m + 1; l + 1 <= d; ++l) res -= frac(l + 1, n - l + 1) * ct.c(n, l) * ct.c(n - l, m + d - l);
  for (std::size_t l = m; l <= d; ++l) res -= rv(l + 1) * rv(m + d + 1 - l) / q(n - l + 1);
  return res;
}

PolySet derivative_ps(const PolySet& ps) {
  PolySet out;
  out.provenance = "derivative of " + ps.provenance;
  for (std::size_t n = 0; n < ps.order(); ++n) out.polys.push_back(scale(derivative(ps[n + 1]), Rat(1) / q(n + 1)));
  return out;
}

ClassicalReport classical_check(const GenSpec& spec, const PolySet& ps, std::size_t d) {
  ClassicalReport report;
  const RecurrenceTable table = extract_recurrence(ps);
  const std::size_t kmax = std::min(table.rows(), std::max<std::size_t>(2 * d + 6, d + 2));
  report.recovered_r = recover_r(spec.alpha, table, kmax);

  bool poly_deg = d + 1 <= kmax && !is_zero(report.recovered_r.r_value(d + 1));
  for (std::size_t j = d + 2; poly_deg && j <= kmax; ++j) poly_deg = is_zero(report.recovered_r.r_value(j));
  report.classical = poly_deg;

  const RecurrenceTable dtable = extract_recurrence(derivative_ps(ps));
  report.derivative_order = detect_order(dtable);
  for (std::size_t n = d; n < dtable.rows() && n + 1 < table.rows(); ++n) {
    for (std::size_t l = 1; l <= d && l <= n; ++l) {
      const Rat expected = frac(n + 1 - l, n + 2) * (table.at(n + 1, l) + spec.r.r_value(l + 1) * spec.alpha[n - l + 1] /
                                                                            (q(n + 1) * spec.alpha[n + 1]));
      report.derivative_residuals.entries.push_back({identity::kClassical, l, n, dtable.at(n, l) - expected});
    }
  }
  return report;
}

}  // namespace dps

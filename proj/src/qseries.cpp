#include "qgram/qseries.hpp"

#include <utility>

namespace qgram {

namespace {

/*
 * Pascal triangle of Gaussian binomials via
 * qbinom(n,k) = qbinom(n-1,k-1) + q^k qbinom(n-1,k), exact and division free.
 * Rows grow on demand; growing is not thread safe, reading is.
 */
std::vector<std::vector<QPoly>>& qbinom_rows() {
  static std::vector<std::vector<QPoly>> rows{{QPoly(1)}};
  return rows;
}

void qbinom_warm(long n) {
  auto& rows = qbinom_rows();
  while (static_cast<long>(rows.size()) <= n) {
    long m = static_cast<long>(rows.size());
    std::vector<QPoly> row(m + 1);
    row[0] = QPoly(1);
    row[m] = QPoly(1);
    for (long k = 1; k < m; ++k)
      row[k] = rows[m - 1][k - 1] + q_power(k) * rows[m - 1][k];
    rows.push_back(std::move(row));
  }
}

void check_same_order(const ESeries& f, const ESeries& g) {
  if (f.order() != g.order())
    fail(Err::OrderMismatch, "series orders " + std::to_string(f.order()) +
                                 " and " + std::to_string(g.order()) +
                                 " differ");
}

long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace

QPoly qbinom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return QPoly();
  qbinom_warm(n);
  return qbinom_rows()[n][k];
}

QPoly qpoch(long n) {
  QPoly out(1);
  for (long i = 1; i <= n; ++i) out *= QPoly(1) - q_power(i);
  return out;
}

ESeries::ESeries(int order) {
  if (order < 0) fail(Err::EmptyOrder, "series order must be at least 0");
  a_.resize(order + 1);
}

ESeries::ESeries(std::vector<QPoly> coeffs) : a_(std::move(coeffs)) {
  if (a_.empty()) fail(Err::EmptyOrder, "series needs at least one coefficient");
}

ESeries series_add(const ESeries& f, const ESeries& g) {
  check_same_order(f, g);
  ESeries out = f;
  for (int n = 0; n <= f.order(); ++n) out[n] += g[n];
  return out;
}

ESeries series_sub(const ESeries& f, const ESeries& g) {
  check_same_order(f, g);
  ESeries out = f;
  for (int n = 0; n <= f.order(); ++n) out[n] -= g[n];
  return out;
}

ESeries series_scale(const QPoly& c, const ESeries& f) {
  ESeries out = f;
  for (int n = 0; n <= f.order(); ++n) out[n] = c * out[n];
  return out;
}

ESeries series_mul_serial(const ESeries& f, const ESeries& g) {
  check_same_order(f, g);
  int N = f.order();
  qbinom_warm(N);
  ESeries out(N);
  for (int n = 0; n <= N; ++n) {
    QPoly s;
    for (int k = 0; k <= n; ++k) s += qbinom(n, k) * f[k] * g[n - k];
    out[n] = s;
  }
  return out;
}

ESeries series_mul_parallel(const ESeries& f, const ESeries& g) {
  check_same_order(f, g);
  int N = f.order();
  qbinom_warm(N);
  ESeries out(N);
#pragma omp parallel for schedule(dynamic)
  for (int n = 0; n <= N; ++n) {
    QPoly s;
    for (int k = 0; k <= n; ++k) s += qbinom(n, k) * f[k] * g[n - k];
    out[n] = s;
  }
  return out;
}

ESeries series_mul(const ESeries& f, const ESeries& g) {
#ifdef _OPENMP
  if (f.order() >= 16) return series_mul_parallel(f, g);
#endif
  return series_mul_serial(f, g);
}

ESeries series_div(const ESeries& f, const ESeries& g) {
  check_same_order(f, g);
  if (!g[0].is_unit_monomial())
    fail(Err::NonUnitConstantTerm,
         "divisor constant term must be a one-term polynomial with unit "
         "coefficient");
  QPoly inv0 = invert_monomial(g[0]);
  int N = f.order();
  qbinom_warm(N);
  ESeries h(N);
  for (int n = 0; n <= N; ++n) {
    QPoly s = f[n];
    for (int k = 1; k <= n; ++k) s -= qbinom(n, k) * g[k] * h[n - k];
    h[n] = inv0 * s;
  }
  return h;
}

ESeries series_subst_q(const ESeries& f, long m) {
  ESeries out = f;
  for (int n = 0; n <= f.order(); ++n) out[n] = q_power(m * n) * out[n];
  return out;
}

ESeries series_dq(const ESeries& f) {
  if (f.order() == 0)
    fail(Err::EmptyOrder, "derivative of an order 0 series has no coefficients");
  ESeries out(f.order() - 1);
  for (int n = 0; n < f.order(); ++n) out[n] = f[n + 1];
  return out;
}

ESeries series_truncate(const ESeries& f, int order) {
  if (order < 0 || order > f.order())
    fail(Err::OrderMismatch, "truncation order out of range");
  ESeries out(order);
  for (int n = 0; n <= order; ++n) out[n] = f[n];
  return out;
}

ESeries series_one(int order) {
  ESeries out(order);
  out[0] = QPoly(1);
  return out;
}

ESeries std_series(const std::string& name, int order, const QPoly& scale) {
  ESeries out(order);
  if (name == "e_q") {
    for (int n = 0; n <= order; ++n) out[n] = QPoly(1);
  } else if (name == "E_q") {
    for (int n = 0; n <= order; ++n) out[n] = q_power(choose2(n));
  } else if (name == "sin_q") {
    for (int n = 1; n <= order; n += 2)
      out[n] = QPoly(((n - 1) / 2) % 2 == 0 ? 1 : -1);
  } else if (name == "cos_q") {
    for (int n = 0; n <= order; n += 2)
      out[n] = QPoly((n / 2) % 2 == 0 ? 1 : -1);
  } else if (name == "Sin_q") {
    for (int n = 1; n <= order; n += 2)
      out[n] = QPoly(((n - 1) / 2) % 2 == 0 ? 1 : -1) * q_power(choose2(n));
  } else if (name == "Cos_q") {
    for (int n = 0; n <= order; n += 2)
      out[n] = QPoly((n / 2) % 2 == 0 ? 1 : -1) * q_power(choose2(n));
  } else if (name == "tan_q") {
    out = series_div(std_series("sin_q", order), std_series("cos_q", order));
  } else if (name == "sec_q") {
    out = series_div(series_one(order), std_series("cos_q", order));
  } else if (name == "Sec_q") {
    out = series_div(series_one(order), std_series("Cos_q", order));
  } else {
    fail(Err::UnknownName, "no standard series named " + name);
  }
  if (!scale.is_one()) {
    QPoly p(1);
    for (int n = 1; n <= order; ++n) {
      p *= scale;
      out[n] = out[n] * p;
    }
  }
  return out;
}

ESeries gen(const Grammar& g, const EvalMap& phi, const Expr& seed, int order) {
  ESeries out(order);
  Expr cur = seed;
  for (int n = 0; n <= order; ++n) {
    out[n] = phi(cur);
    if (n < order) cur = derive(g, cur);
  }
  return out;
}

}  // namespace qgram

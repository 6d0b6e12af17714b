#pragma once

#include <string>
#include <vector>

#include "qgram/evalmap.hpp"
#include "qgram/grammar.hpp"
#include "qgram/qpoly.hpp"

namespace qgram {

/* Gaussian binomial coefficient, zero outside 0 <= k <= n. */
QPoly qbinom(long n, long k);

/* (q;q)_n, the product of 1 - q^i for i = 1..n. */
QPoly qpoch(long n);

/*
 * Truncated Eulerian series: coefficients a_0..a_N of sum a_n u^n / (q;q)_n.
 * The order N is fixed at construction and never negative.
 */
class ESeries {
 public:
  explicit ESeries(int order);
  explicit ESeries(std::vector<QPoly> coeffs);

  int order() const { return static_cast<int>(a_.size()) - 1; }
  const QPoly& operator[](int n) const { return a_.at(n); }
  QPoly& operator[](int n) { return a_.at(n); }
  const std::vector<QPoly>& coeffs() const { return a_; }

  friend bool operator==(const ESeries&, const ESeries&) = default;

 private:
  std::vector<QPoly> a_;
};

/* Termwise sum and difference; operands must share the order. */
ESeries series_add(const ESeries& f, const ESeries& g);
ESeries series_sub(const ESeries& f, const ESeries& g);
ESeries series_scale(const QPoly& c, const ESeries& f);

/*
 * Product by Gaussian convolution, (fg)_n = sum_k qbinom(n,k) f_k g_{n-k}.
 * Matches the ordinary power series product of the summed forms.  The serial
 * and parallel forms agree exactly; series_mul picks one by order.
 */
ESeries series_mul_serial(const ESeries& f, const ESeries& g);
ESeries series_mul_parallel(const ESeries& f, const ESeries& g);
ESeries series_mul(const ESeries& f, const ESeries& g);

/* Quotient: g_0 must be a one-term polynomial with unit coefficient. */
ESeries series_div(const ESeries& f, const ESeries& g);

/* Substitute u -> q^m u, i.e. multiply a_n by q^(m n). */
ESeries series_subst_q(const ESeries& f, long m);

/* q-derivative in u: drop a_0 and shift down; order decreases by one. */
ESeries series_dq(const ESeries& f);

ESeries series_truncate(const ESeries& f, int order);
ESeries series_one(int order);

/*
 * Named classical series: e_q, E_q, sin_q, cos_q, Sin_q, Cos_q, tan_q,
 * sec_q, Sec_q.  A scale c multiplies a_n by c^n, i.e. substitutes u -> c u.
 */
ESeries std_series(const std::string& name, int order,
                   const QPoly& scale = QPoly(1));

/* Coefficients phi(D^n(seed)) for n = 0..order. */
ESeries gen(const Grammar& g, const EvalMap& phi, const Expr& seed, int order);

}  // namespace qgram

/*
 * Exercises q-arithmetic and the Eulerian series algebra: Gaussian
 * binomials, q-Pochhammer products, named series, the convolution product
 * against its serial reference, division, substitution, the series
 * q-derivative, grammar generating functions, and the product-to-convolution
 * law on every catalog grammar meeting the shift and master-linear
 * hypotheses.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qgram/catalog.hpp"
#include "qgram/qseries.hpp"
#include "qgram/textio.hpp"

using namespace qgram;

namespace {

QPoly q() { return QPoly::var("q"); }

ESeries random_series(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> qe(0, 2);
  ESeries f(order);
  for (int n = 0; n <= order; ++n)
    f[n] = QPoly(coeff(rng)) * q_power(qe(rng));
  return f;
}

/* Random expression in the grammar's own masters, plain letters only. */
Expr random_expr_over(std::mt19937_64& rng, const Grammar& g) {
  std::uniform_int_distribution<int> nterms(1, 2);
  std::uniform_int_distribution<int> len(0, 2);
  std::uniform_int_distribution<std::size_t> mi(0, g.masters.size() - 1);
  std::uniform_int_distribution<int> idx(0, 2);
  std::uniform_int_distribution<int> coeff(1, 2);
  Expr a;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<Letter> ls;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      ls.push_back(Letter{g.masters[mi(rng)], idx(rng), +1});
    a.add_term(Word(std::move(ls)), QPoly(coeff(rng)));
  }
  return a;
}

}  // namespace

TEST_CASE("Gaussian binomials") {
  CHECK(qbinom(2, 1) == QPoly(1) + q());
  CHECK(qbinom(4, 2) ==
        QPoly(1) + q() + QPoly(2) * q_power(2) + q_power(3) + q_power(4));
  CHECK(qbinom(3, 5).is_zero());
  CHECK(qbinom(-1, 0).is_zero());
  CHECK(qbinom(5, 0).is_one());

  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(qbinom(n, k) == qbinom(n, n - k));
      if (n > 0 && k > 0)
        CHECK(qbinom(n, k) ==
              qbinom(n - 1, k - 1) + q_power(k) * qbinom(n - 1, k));
    }
}

TEST_CASE("q-Pochhammer products") {
  CHECK(qpoch(0).is_one());
  CHECK(qpoch(1) == QPoly(1) - q());
  CHECK(qpoch(2) == QPoly(1) - q() - q_power(2) + q_power(3));
  CHECK(qpoch(4) == qpoch(3) * (QPoly(1) - q_power(4)));
}

TEST_CASE("named series coefficients") {
  const ESeries eq = std_series("e_q", 4);
  for (int n = 0; n <= 4; ++n) CHECK(eq[n].is_one());

  const ESeries Eq = std_series("E_q", 3);
  CHECK(Eq[0].is_one());
  CHECK(Eq[1].is_one());
  CHECK(Eq[2] == q());
  CHECK(Eq[3] == q_power(3));

  const ESeries cos = std_series("cos_q", 4);
  CHECK(cos[0] == QPoly(1));
  CHECK(cos[1].is_zero());
  CHECK(cos[2] == QPoly(-1));
  CHECK(cos[3].is_zero());
  CHECK(cos[4] == QPoly(1));

  const ESeries tan = std_series("tan_q", 3);
  CHECK(tan[0].is_zero());
  CHECK(tan[1].is_one());
  CHECK(tan[2].is_zero());
  CHECK(tan[3] == q() + q_power(2));

  try {
    std_series("cosh_q", 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnknownName);
  }
}

TEST_CASE("series ring laws on random values") {
  std::mt19937_64 rng(0x5E81E5ULL);
  const int N = 6;
  for (int i = 0; i < 60; ++i) {
    const ESeries f = random_series(rng, N);
    const ESeries g = random_series(rng, N);
    const ESeries h = random_series(rng, N);
    CHECK(series_mul(f, g) == series_mul(g, f));
    CHECK(series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h)));
    CHECK(series_mul(f, series_add(g, h)) ==
          series_add(series_mul(f, g), series_mul(f, h)));
    CHECK(series_mul(f, series_one(N)) == f);
    CHECK(series_add(f, series_sub(g, f)) == g);
    CHECK(series_scale(q(), f) == series_mul(series_scale(q(), series_one(N)), f));
  }
}

TEST_CASE("serial and parallel convolution agree") {
  std::mt19937_64 rng(0x5E81E6ULL);
  for (int i = 0; i < 10; ++i) {
    const ESeries f = random_series(rng, 12);
    const ESeries g = random_series(rng, 12);
    CHECK(series_mul_serial(f, g) == series_mul_parallel(f, g));
  }
}

TEST_CASE("the two q-exponentials are reciprocal") {
  const int N = 8;
  const ESeries prod =
      series_mul(std_series("e_q", N), std_series("E_q", N, QPoly(-1)));
  CHECK(prod == series_one(N));
  for (int n = 1; n <= N; ++n) {
    QPoly s;
    for (long k = 0; k <= n; ++k) {
      QPoly t = qbinom(n, k) * q_power(k * (k - 1) / 2);
      s += (k % 2 == 0) ? t : -t;
    }
    CHECK(s.is_zero());
  }
}

TEST_CASE("division inverts multiplication") {
  std::mt19937_64 rng(0x5E81E7ULL);
  const int N = 6;
  for (int i = 0; i < 40; ++i) {
    const ESeries f = random_series(rng, N);
    ESeries g = random_series(rng, N);
    g[0] = QPoly::var("x");
    CHECK(series_mul(g, series_div(f, g)) == f);
  }

  CHECK(std_series("tan_q", 6) ==
        series_div(std_series("sin_q", 6), std_series("cos_q", 6)));
  CHECK(series_mul(std_series("sec_q", 6), std_series("cos_q", 6)) ==
        series_one(6));

  ESeries bad = series_one(3);
  bad[0] = QPoly(1) - QPoly::var("x", -1) * QPoly::var("y");
  try {
    series_div(series_one(3), bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NonUnitConstantTerm);
  }
}

TEST_CASE("substitution scales coefficients by powers of q") {
  const QPoly xy = QPoly::var("x") - QPoly::var("y");
  const ESeries f = std_series("e_q", 6, xy);
  CHECK(series_subst_q(f, 0) == f);
  const ESeries g = series_subst_q(f, 1);
  for (int n = 0; n <= 6; ++n) CHECK(g[n] == pow(xy, n) * q_power(n));

  ESeries c(4);
  c[0] = QPoly(7);
  CHECK(series_subst_q(c, 3) == c);
}

TEST_CASE("series q-derivative shifts coefficients") {
  const ESeries eq = std_series("e_q", 6);
  CHECK(series_dq(eq) == std_series("e_q", 5));

  ESeries c(4);
  c[0] = QPoly(5);
  const ESeries dc = series_dq(c);
  for (int n = 0; n <= 3; ++n) CHECK(dc[n].is_zero());

  const int N = 6;
  const ESeries tan = std_series("tan_q", N);
  const ESeries rhs = series_add(
      series_one(N - 1),
      series_mul(series_truncate(tan, N - 1),
                 series_truncate(series_subst_q(tan, 1), N - 1)));
  CHECK(series_dq(tan) == rhs);

  try {
    series_dq(ESeries(0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::EmptyOrder);
  }
}

TEST_CASE("order discipline") {
  try {
    series_add(ESeries(3), ESeries(4));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::OrderMismatch);
  }
  try {
    ESeries(-1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::EmptyOrder);
  }
  try {
    ESeries(std::vector<QPoly>{});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::EmptyOrder);
  }
  try {
    series_truncate(ESeries(3), 4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::OrderMismatch);
  }
}

TEST_CASE("grammar generating functions") {
  const CatalogEntry& inv = get_entry("G_inv");
  const ESeries a = gen(inv.grammar, inv.eval, inv.seed, 1);
  CHECK(a[0] == QPoly::var("x"));
  CHECK(a[1] == QPoly::var("x") * QPoly::var("y"));

  const CatalogEntry& cyc = get_entry("G_cyc");
  const ESeries b = gen(cyc.grammar, cyc.eval, cyc.seed, 1);
  CHECK(b[0] == QPoly::var("e"));
  CHECK(b[1] == QPoly::var("beta") * QPoly::var("e") * QPoly::var("z"));

  const ESeries c = gen(inv.grammar, inv.eval, Expr::one(), 3);
  CHECK(c[0].is_one());
  for (int n = 1; n <= 3; ++n) CHECK(c[n].is_zero());
}

TEST_CASE("products map to Gaussian convolution on shift grammars") {
  std::mt19937_64 rng(0x5E81E8ULL);
  const int N = 5;
  int covered = 0;
  for (const CatalogEntry& c : catalog()) {
    if (!satisfies_shift(c.grammar) || !c.eval.is_master_linear()) continue;
    ++covered;
    for (int rep = 0; rep < 3; ++rep) {
      const Expr f = random_expr_over(rng, c.grammar);
      const Expr g = random_expr_over(rng, c.grammar);
      const ESeries lhs = gen(c.grammar, c.eval, expr_mul(f, g), N);
      const ESeries rhs = series_mul(gen(c.grammar, c.eval, f, N),
                                     gen(c.grammar, c.eval, g, N));
      CHECK(lhs == rhs);
    }
  }
  CHECK(covered == 12);
}

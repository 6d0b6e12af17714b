/*
 * Exercises the evaluation morphisms into the commutative ring: worked
 * images, the homomorphism laws, invertibility on formal inverses, order
 * invisibility of the commutative image, and the master-linear predicate.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qgram/catalog.hpp"
#include "qgram/evalmap.hpp"
#include "qgram/grammar.hpp"
#include "qgram/qpoly.hpp"

using namespace qgram;

namespace {

Letter let(const std::string& m, int index, int sign = +1) {
  return Letter{master_intern(m), index, static_cast<std::int8_t>(sign)};
}

Word wd(std::vector<Letter> ls) { return Word(std::move(ls)); }

EvalImage img(const std::string& var, long qj = 0, int sign = +1) {
  return EvalImage{sign, Monomial::var(var), qj};
}

Word random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> mi(0, 1);
  std::uniform_int_distribution<int> idx(0, 3);
  std::uniform_int_distribution<int> sg(0, 1);
  std::vector<Letter> ls;
  const int n = len(rng);
  for (int i = 0; i < n; ++i)
    ls.push_back(let(mi(rng) ? "x" : "y", idx(rng), sg(rng) ? 1 : -1));
  return wd(std::move(ls));
}

Expr random_expr(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Expr a;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t)
    a.add_term(random_word(rng), QPoly(coeff(rng)));
  return a;
}

}  // namespace

TEST_CASE("worked images") {
  const CatalogEntry& tan = get_entry("G_tan");
  const Expr d2 = derive_n(tan.grammar, tan.seed, 2);
  const QPoly x = QPoly::var("x");
  const QPoly q = QPoly::var("q");
  CHECK(evaluate(tan.eval, d2) ==
        (QPoly(1) + q) * x + (QPoly(1) + q) * x * x * x);

  EvalMap indexed;
  indexed.set(master_intern("x"), img("x", 1));
  indexed.set(master_intern("y"), img("y", 1));
  CHECK(evaluate(indexed, Expr(wd({let("x", 1), let("y", 0)}))) ==
        q * x * QPoly::var("y"));

  EvalMap plain;
  plain.set(master_intern("y"), img("y"));
  CHECK(evaluate(plain, Expr(wd({let("y", 0, -1)}))) ==
        QPoly::var("y", -1));
}

TEST_CASE("homomorphism laws on random expressions") {
  std::mt19937_64 rng(0xE7A1ULL);
  EvalMap phi = get_entry("G_inv").eval;
  for (int i = 0; i < 150; ++i) {
    const Expr a = random_expr(rng);
    const Expr b = random_expr(rng);
    CHECK(phi(expr_mul(a, b)) == phi(a) * phi(b));
    CHECK(phi(expr_add(a, b)) == phi(a) + phi(b));
  }
}

TEST_CASE("word images are invertible") {
  std::mt19937_64 rng(0xE7A2ULL);
  EvalMap indexed;
  indexed.set(master_intern("x"), img("x", 1));
  indexed.set(master_intern("y"), img("y", 2, -1));
  for (int i = 0; i < 150; ++i) {
    const Word w = random_word(rng);
    CHECK((indexed.word_value(w) * indexed.word_value(w.inverse())).is_one());
  }
  const Letter l = let("y", 3, -1);
  CHECK((indexed.letter_value(l) * indexed.letter_value(l.inverse()))
            .is_one());
}

TEST_CASE("commutative image ignores letter order") {
  std::mt19937_64 rng(0xE7A3ULL);
  Grammar probe;
  probe.name = "probe";
  probe.masters = {master_intern("x"), master_intern("y")};
  EvalMap indexed;
  indexed.set(master_intern("x"), img("x", 1));
  indexed.set(master_intern("y"), img("y"));
  for (int i = 0; i < 100; ++i) {
    const Expr a = random_expr(rng);
    for (Order o : {Order::KSO, Order::LPO, Order::AIO, Order::DIO}) {
      probe.order = o;
      CHECK(evaluate(indexed, apply_order(probe, a)) == evaluate(indexed, a));
    }
  }
}

TEST_CASE("master-linear predicate") {
  EvalMap plain;
  plain.set(master_intern("x"), img("x"));
  plain.set(master_intern("y"), img("y"));
  CHECK(plain.is_master_linear());

  EvalMap indexed;
  indexed.set(master_intern("x"), img("x", 1));
  CHECK(!indexed.is_master_linear());

  CHECK(EvalMap().is_master_linear());

  CHECK(get_entry("G_inv").eval.is_master_linear());
  CHECK(!get_entry("G_maj").eval.is_master_linear());
}

TEST_CASE("missing image is rejected") {
  EvalMap plain;
  plain.set(master_intern("x"), img("x"));
  try {
    evaluate(plain, Expr(wd({let("y", 0)})));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnknownMaster);
  }
}

/*
 * Exercises the rewriting layer: the four letter orders on worked words,
 * rule instantiation including the inverse extension, derivative linearity
 * and well-definedness, agreement of the serial and parallel drivers, the
 * q-linear and shift predicates, and the reorder-cancellation flag.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "qgram/catalog.hpp"
#include "qgram/grammar.hpp"
#include "qgram/textio.hpp"

using namespace qgram;

namespace {

Letter let(const std::string& m, int index, int sign = +1) {
  return Letter{master_intern(m), index, static_cast<std::int8_t>(sign)};
}

Word wd(std::vector<Letter> ls) { return Word(std::move(ls)); }

Grammar probe(Order o) {
  Grammar g;
  g.name = "probe";
  g.masters = {master_intern("x"), master_intern("y")};
  g.order = o;
  return g;
}

Expr random_expr(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> mi(0, 1);
  std::uniform_int_distribution<int> idx(0, 2);
  std::uniform_int_distribution<int> coeff(1, 3);
  Expr a;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<Letter> ls;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
      ls.push_back(let(mi(rng) ? "x" : "y", idx(rng)));
    a.add_term(wd(std::move(ls)), QPoly(coeff(rng)));
  }
  return a;
}

}  // namespace

TEST_CASE("order names round-trip") {
  for (Order o : {Order::KSO, Order::LPO, Order::AIO, Order::DIO})
    CHECK(order_from_name(order_name(o)) == o);
  CHECK(!order_from_name("nope").has_value());
}

TEST_CASE("orders sort one worked word each") {
  const Expr lhs1(
      wd({let("x", 2), let("y", 2, -1), let("x", 1), let("x", 3),
          let("x", 3), let("y", 3)}));
  CHECK(apply_order(probe(Order::LPO), lhs1) ==
        parse_expr("x[1]*x[2]*x[3]*x[3]*y[2]^-1*y[3]"));
  CHECK(apply_order(probe(Order::DIO), lhs1) ==
        parse_expr("x[3]*x[3]*y[3]*x[2]*y[2]^-1*x[1]"));
  CHECK(apply_order(probe(Order::KSO), lhs1) == lhs1);

  const Expr lhs2 = expr_scale(
      QPoly(1) + QPoly::var("q"),
      Expr(wd({let("y", 1), let("y", 1), let("x", 1, -1), let("x", 2)})));
  CHECK(apply_order(probe(Order::AIO), lhs2) ==
        parse_expr("(1+q)*x[1]^-1*y[1]*y[1]*x[2]"));
}

TEST_CASE("order application is idempotent") {
  std::mt19937_64 rng(0x0D7ULL);
  for (int i = 0; i < 100; ++i) {
    const Expr e = random_expr(rng);
    for (Order o : {Order::KSO, Order::LPO, Order::AIO, Order::DIO}) {
      const Expr once = apply_order(probe(o), e);
      CHECK(apply_order(probe(o), once) == once);
    }
  }
}

TEST_CASE("reordering that creates an adjacent inverse pair cancels") {
  const Expr e(wd({let("x", 1, -1), let("y", 1), let("x", 1)}));
  DeriveStats stats;
  const Expr sorted = apply_order(probe(Order::AIO), e, &stats);
  CHECK(sorted == Expr(wd({let("y", 1)})));
  CHECK(stats.reorder_cancellation);

  DeriveStats clean;
  apply_order(probe(Order::LPO), Expr(wd({let("y", 0), let("x", 0)})),
              &clean);
  CHECK(!clean.reorder_cancellation);
}

TEST_CASE("catalog derivations never cancel on reorder") {
  for (const CatalogEntry& c : catalog()) {
    DeriveStats stats;
    derive_n(c.grammar, c.seed, 4, &stats);
    CHECK(!stats.reorder_cancellation);
  }
}

TEST_CASE("rule instantiation") {
  const Grammar& tan = get_entry("G_tan").grammar;
  Expr body = rule_apply(tan, let("x", 1));
  Expr want = expr_scale(QPoly::var("q"),
                         expr_add(Expr::one(),
                                  Expr(wd({let("x", 1), let("x", 2)}))));
  CHECK(body == want);

  const Grammar& maj = get_entry("G_maj").grammar;
  CHECK(rule_apply(maj, let("x", 3)) ==
        Expr(wd({let("x", 0), let("y", 0)}), QPoly::var("q", 3)));

  const Grammar& inv = get_entry("G_inv").grammar;
  CHECK(rule_apply(inv, let("y", 0, -1)) ==
        Expr(wd({let("x", 1), let("y", 1, -1)}), QPoly(-1)));
}

TEST_CASE("unknown master is rejected") {
  const Grammar& tan = get_entry("G_tan").grammar;
  try {
    rule_apply(tan, let("w", 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnknownMaster);
  }
}

TEST_CASE("derivative of a constant vanishes and iteration composes") {
  const Grammar& tan = get_entry("G_tan").grammar;
  CHECK(derive(tan, Expr::one()).is_zero());
  CHECK(derive(tan, Expr()).is_zero());

  const Expr seed = get_entry("G_tan").seed;
  CHECK(derive_n(tan, seed, 0) == seed);
  CHECK(derive_n(tan, seed, 3) == derive(tan, derive(tan, derive(tan, seed))));

  CHECK(derive(tan, seed) == parse_expr("1 + x[1]*x[0]"));
  CHECK(derive_n(tan, seed, 2) ==
        parse_expr("(1+q)*x[1] + x[1]*x[1]*x[0] + q*x[2]*x[1]*x[1]"));
  CHECK(derive_n(get_entry("G_tan'").grammar, seed, 2) ==
        parse_expr("q*x[0] + x[2] + (1+q)*x[0]*x[1]*x[2]"));
}

TEST_CASE("derivative is linear") {
  std::mt19937_64 rng(0x11EA8ULL);
  const Grammar& g = get_entry("G_inv").grammar;
  for (int i = 0; i < 100; ++i) {
    const Expr a = random_expr(rng);
    const Expr b = random_expr(rng);
    const QPoly c = QPoly(2) + QPoly::var("q");
    CHECK(derive(g, expr_add(a, b)) ==
          expr_add(derive(g, a), derive(g, b)));
    CHECK(derive(g, expr_scale(c, a)) == expr_scale(c, derive(g, a)));
  }
}

TEST_CASE("serial and parallel drivers agree") {
  std::mt19937_64 rng(0x9A8A11E1ULL);
  const char* ids[] = {"G_tan", "G_inv", "G_cyc", "G_AndII", "G_maj"};
  for (const char* id : ids) {
    const CatalogEntry& c = get_entry(id);
    Expr a = derive_n(c.grammar, c.seed, 3);
    CHECK(derive_serial(c.grammar, a) == derive_parallel(c.grammar, a));
  }
  const Grammar& g = get_entry("G_AndI").grammar;
  for (int i = 0; i < 50; ++i) {
    const Expr a = random_expr(rng);
    CHECK(derive_serial(g, a) == derive_parallel(g, a));
  }
}

TEST_CASE("q-linear and shift predicates") {
  CHECK(is_q_linear(get_entry("G_cyc").grammar));
  CHECK(is_q_linear(get_entry("G_binv").grammar));
  CHECK(!is_q_linear(get_entry("G_tan").grammar));
  CHECK(!is_q_linear(get_entry("G_maj").grammar));

  CHECK(satisfies_shift(get_entry("G_tan").grammar));
  CHECK(satisfies_shift(get_entry("G_inv").grammar));
  CHECK(satisfies_shift(get_entry("G_cyc").grammar));
  CHECK(!satisfies_shift(get_entry("G_maj").grammar));
}

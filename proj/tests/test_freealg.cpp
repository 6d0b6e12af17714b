/*
 * Exercises the free group on indexed letters and its group algebra:
 * reduction (idempotent and confluent against an exhaustive cancellation
 * search), word inversion, algebra arithmetic, the index shift, and the
 * term-counting operator.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "qgram/catalog.hpp"
#include "qgram/freealg.hpp"
#include "qgram/grammar.hpp"
#include "qgram/textio.hpp"

using namespace qgram;

namespace {

Letter let(const std::string& m, int index, int sign = +1) {
  return Letter{master_intern(m), index, static_cast<std::int8_t>(sign)};
}

Word wd(std::vector<Letter> ls) { return Word(std::move(ls)); }

std::vector<Letter> random_letters(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> mi(0, 1);
  std::uniform_int_distribution<int> idx(0, 3);
  std::uniform_int_distribution<int> sg(0, 1);
  std::vector<Letter> ls;
  const int n = len(rng);
  for (int i = 0; i < n; ++i)
    ls.push_back(let(mi(rng) ? "x" : "y", idx(rng), sg(rng) ? 1 : -1));
  return ls;
}

Expr random_expr(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Expr a;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t)
    a.add_term(wd(random_letters(rng, 4)), QPoly(coeff(rng)));
  return a;
}

using Key = std::vector<std::tuple<int, int, int>>;

Key key_of(const std::vector<Letter>& ls) {
  Key k;
  for (const Letter& l : ls) k.emplace_back(l.master, l.index, l.sign);
  return k;
}

/* Collect every fully cancelled form reachable by erasing adjacent inverse
   pairs in any order.  Confluence means the set is a singleton. */
void all_reductions(const std::vector<Letter>& s, std::set<Key>& out) {
  bool any = false;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i].master == s[i + 1].master && s[i].index == s[i + 1].index &&
        s[i].sign == -s[i + 1].sign) {
      any = true;
      std::vector<Letter> t(s.begin(), s.begin() + i);
      t.insert(t.end(), s.begin() + i + 2, s.end());
      all_reductions(t, out);
    }
  }
  if (!any) out.insert(key_of(s));
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(wd({let("x", 0), let("x", 0, -1)}).empty());
  CHECK(wd({let("x", 1), let("x", 0), let("x", 0, -1), let("x", 1, -1)})
            .empty());
  const Word untouched = wd({let("x", 0), let("y", 0), let("y", 1, -1)});
  CHECK(untouched.size() == 3);
  CHECK(to_text(untouched) == "x[0]*y[0]*y[1]^-1");
}

TEST_CASE("reduce is idempotent and confluent") {
  std::mt19937_64 rng(0x5EED01ULL);
  for (int i = 0; i < 300; ++i) {
    const std::vector<Letter> raw = random_letters(rng, 8);
    const std::vector<Letter> once = reduce(raw);
    CHECK(reduce(once) == once);

    std::set<Key> forms;
    all_reductions(raw, forms);
    REQUIRE(forms.size() == 1);
    CHECK(*forms.begin() == key_of(once));
  }
}

TEST_CASE("word inversion reverses and flips signs") {
  CHECK(wd({let("x", 1), let("x", 2)}).inverse() ==
        wd({let("x", 2, -1), let("x", 1, -1)}));
  CHECK(Word().inverse() == Word());
  CHECK(wd({let("y", 2, -1), let("x", 0)}).inverse() ==
        wd({let("x", 0, -1), let("y", 2)}));

  std::mt19937_64 rng(0x5EED02ULL);
  for (int i = 0; i < 200; ++i) {
    const Word w = wd(random_letters(rng, 6));
    CHECK(w.inverse().inverse() == w);
    CHECK((w * w.inverse()).empty());
    CHECK((w.inverse() * w).empty());
  }
}

TEST_CASE("algebra arithmetic") {
  const Expr x0(wd({let("x", 0)}));
  const Expr x0inv(wd({let("x", 0, -1)}));
  CHECK(expr_mul(x0, x0inv) == Expr::one());

  const QPoly c = QPoly(1) + QPoly::var("q");
  const Word w = wd({let("y", 1), let("y", 1), let("x", 1, -1), let("x", 2)});
  const Expr scaled = expr_scale(QPoly::var("q"), Expr(w, c));
  CHECK(scaled == Expr(w, QPoly::var("q") + QPoly::var("q", 2)));

  const Expr y0(wd({let("y", 0)}));
  const Expr x1(wd({let("x", 1)}));
  CHECK(expr_mul(expr_add(x0, y0), x1) ==
        expr_add(Expr(wd({let("x", 0), let("x", 1)})),
                 Expr(wd({let("y", 0), let("x", 1)}))));
}

TEST_CASE("algebra laws on random expressions") {
  std::mt19937_64 rng(0x5EED03ULL);
  for (int i = 0; i < 150; ++i) {
    const Expr a = random_expr(rng);
    const Expr b = random_expr(rng);
    const Expr c = random_expr(rng);
    CHECK(expr_mul(expr_mul(a, b), c) == expr_mul(a, expr_mul(b, c)));
    CHECK(expr_mul(a, Expr::one()) == a);
    CHECK(expr_mul(Expr::one(), a) == a);
    CHECK(expr_mul(a, expr_add(b, c)) ==
          expr_add(expr_mul(a, b), expr_mul(a, c)));
    CHECK(expr_add(a, expr_neg(a)).is_zero());
  }
}

TEST_CASE("index shift raises every letter") {
  const Expr a(wd({let("y", 2, -1), let("x", 0), let("x", 0), let("y", 1)}));
  CHECK(up_arrow(a, 1) ==
        Expr(wd({let("y", 3, -1), let("x", 1), let("x", 1), let("y", 2)})));
  CHECK(up_arrow(a, 3) ==
        Expr(wd({let("y", 5, -1), let("x", 3), let("x", 3), let("y", 4)})));
  CHECK(up_arrow(Expr::one(), 2) == Expr::one());

  std::mt19937_64 rng(0x5EED04ULL);
  for (int i = 0; i < 100; ++i) {
    const Expr e = random_expr(rng);
    CHECK(up_arrow(up_arrow(e, 2), 3) == up_arrow(e, 5));
    CHECK(up_arrow(e, 0) == e);
  }
}

TEST_CASE("term counting") {
  CHECK(omega(Expr()) == 0);
  Expr a;
  a.add_term(wd({let("x", 0)}), QPoly(1));
  a.add_term(wd({let("x", 1)}), QPoly::var("q"));
  CHECK(omega(a) == 2);

  const CatalogEntry& ts = get_entry("G_tan_sec");
  CHECK(omega(derive_n(ts.grammar, Expr(wd({let("x", 0)})), 2)) == 3);
  CHECK(omega(derive_n(ts.grammar, Expr(wd({let("x", 0)})), 3)) == 9);
}

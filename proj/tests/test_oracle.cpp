/*
 * Exercises the brute-force combinatorial reference layer: permutation
 * statistics on worked examples, the cycle map and its transported
 * statistics, the two recursive permutation families and their polynomials,
 * increasing binary trees with the inversion statistic, reference
 * polynomials, named sequences, the Motzkin-path characterization of the
 * derivative words of the tree grammar, and bound checks.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "qgram/catalog.hpp"
#include "qgram/grammar.hpp"
#include "qgram/oracle.hpp"
#include "qgram/textio.hpp"

using namespace qgram;

namespace {

QPoly parse(const std::string& s) { return parse_qpoly(s); }

std::set<Perm> perm_set(const std::vector<Perm>& v) {
  return std::set<Perm>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("statistics on worked permutations") {
  CHECK(perm_stats({2, 3, 1, 4}).inv == 2);
  CHECK(perm_stats({3, 4, 1, 2}).inv == 4);

  const PermStats s = perm_stats({5, 2, 7, 1, 4, 6, 3, 9, 10, 8});
  CHECK(s.asc == 6);
  CHECK(s.des == 5);
  CHECK(s.maj == 19);
  CHECK(s.inv == 13);
  CHECK(s.exc == 4);
  CHECK(s.drop == 4);
  CHECK(s.fix == 2);
  CHECK(s.iasc == 6);
  CHECK(s.isol == 0);
  CHECK(s.rlmin == 3);
  CHECK(cycle_count({5, 2, 7, 1, 4, 6, 3, 9, 10, 8}) == 5);

  const PermStats t = perm_stats({5, 4, 1, 2, 7, 3, 6, 9, 10, 8});
  CHECK(t.isol == 2);
  CHECK(t.rlmin == 5);
  CHECK(t.des == 5);
  CHECK(t.iasc == 4);
}

TEST_CASE("padded ascent and descent counts") {
  CHECK(perm_stats({1}).asc == 1);
  CHECK(perm_stats({1}).des == 1);
  CHECK(perm_stats({2, 1}).asc == 1);
  CHECK(perm_stats({2, 1}).des == 2);

  Perm p(6);
  std::iota(p.begin(), p.end(), 1);
  do {
    const PermStats st = perm_stats(p);
    CHECK(st.asc + st.des == 7);
    CHECK(st.iasc + st.isol == st.asc);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("cycle map on worked permutations") {
  CHECK(psi_cycle_map({5, 2, 7, 1, 4, 6, 3, 9, 10, 8}) ==
        Perm{5, 4, 1, 2, 7, 3, 6, 9, 10, 8});
  CHECK(psi_cycle_map({1, 2, 3}) == Perm{1, 2, 3});
  CHECK(psi_cycle_map({2, 1}) == Perm{2, 1});

  try {
    psi_cycle_map({1, 3});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotFullPermutation);
  }
}

TEST_CASE("cycle map transports four statistics") {
  for (int n = 1; n <= 6; ++n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      const PermStats src = perm_stats(p);
      const Perm img = psi_cycle_map(p);
      const PermStats dst = perm_stats(img);
      CHECK(src.exc == dst.iasc);
      CHECK(src.drop == dst.des - 1);
      CHECK(src.fix == dst.isol);
      CHECK(cycle_count(p) == dst.rlmin);
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("Eulerian reference polynomials") {
  CHECK(eulerian_poly(1, "inv") == parse("x*y"));
  CHECK(eulerian_poly(2, "inv") == parse("x^2*y + q*x*y^2"));
  CHECK(eulerian_poly(2, "maj") == parse("x^2*y + q*x*y^2"));
  CHECK(eulerian_poly(3, "maj") ==
        parse("x^3*y + (2*q+2*q^2)*x^2*y^2 + q^3*x*y^3"));

  long long fact = 1;
  for (int n = 1; n <= 6; ++n) {
    fact *= n;
    for (const char* stat : {"maj", "inv"}) {
      QPoly p = eulerian_poly(n, stat);
      for (const char* v : {"q", "x", "y"})
        p = substitute(p, var_intern(v), QPoly(1));
      CHECK(p == QPoly(fact));
    }
  }

  try {
    eulerian_poly(9, "maj");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::BoundExceeded);
  }
  try {
    eulerian_poly(3, "des");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnknownName);
  }
}

TEST_CASE("Roselle reference polynomial") {
  CHECK(roselle_poly(1) == parse("z*beta"));
  CHECK(roselle_poly(2) == parse("z^2*beta^2 + q*x*y*beta"));

  try {
    roselle_poly(8);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::BoundExceeded);
  }
}

TEST_CASE("recursive permutation families at size four") {
  const std::set<Perm> one = {
      {1, 2, 3, 4}, {1, 3, 2, 4}, {2, 3, 1, 4}, {2, 1, 3, 4}, {3, 1, 2, 4}};
  CHECK(perm_set(andre_perms(4, AndreKind::I)) == one);

  const std::set<Perm> two = {
      {1, 2, 3, 4}, {1, 4, 2, 3}, {3, 4, 1, 2}, {4, 1, 2, 3}, {3, 1, 2, 4}};
  CHECK(perm_set(andre_perms(4, AndreKind::II)) == two);

  CHECK(andre_perms(1, AndreKind::I) == std::vector<Perm>{{1}});
  CHECK(andre_perms(1, AndreKind::II) == std::vector<Perm>{{1}});
}

TEST_CASE("family membership agrees with exhaustive filtering") {
  for (AndreKind kind : {AndreKind::I, AndreKind::II}) {
    for (int n = 1; n <= 7; ++n) {
      const std::set<Perm> fam = perm_set(andre_perms(n, kind));
      Perm p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 1);
      do {
        CHECK(is_andre(p, kind) == (fam.count(p) == 1));
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
}

TEST_CASE("family sizes follow the alternating-count sequence") {
  for (int n = 1; n <= 9; ++n) {
    const auto count = static_cast<long long>(andre_perms(n, AndreKind::I).size());
    CHECK(count == static_cast<long long>(andre_perms(n, AndreKind::II).size()));
    CHECK(count == sequence_term("euler", n));
  }
}

TEST_CASE("descent-inversion polynomials of the families") {
  CHECK(andre_perm_poly(1, AndreKind::I) == parse("t"));
  CHECK(andre_perm_poly(3, AndreKind::I) == parse("t + q*t^2"));
  CHECK(andre_perm_poly(4, AndreKind::II) ==
        parse("t + (2*q^2+q^3+q^4)*t^2"));

  const QPoly f5 = andre_perm_poly(5, AndreKind::I);
  CHECK(f5 == parse("t + (3*q+4*q^2+3*q^3+q^4)*t^2 + (q^2+q^3+2*q^4)*t^3"));
}

TEST_CASE("increasing trees invert the in-order reading") {
  for (int n = 1; n <= 7; ++n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
      const Tree t = psi_tree(p);
      CHECK(tree_to_perm(t.get()) == p);
      CHECK(tree_inv(t.get()) == perm_stats(p).inv);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  const Tree t1 = psi_tree({2, 3, 1, 4});
  CHECK(tree_inv(t1.get()) == 2);
  const Tree t2 = psi_tree({3, 4, 1, 2});
  CHECK(tree_inv(t2.get()) == 4);

  const Tree single = psi_tree({1});
  const TreeShape sh = tree_leaf_deg1(single.get());
  CHECK(sh.leaves == 1);
  CHECK(sh.deg1 == 0);
  CHECK(tree_inv(single.get()) == 0);
}

TEST_CASE("tree statistics transport along the bijection") {
  for (AndreKind kind : {AndreKind::I, AndreKind::II}) {
    for (int n = 1; n <= 7; ++n) {
      for (const Perm& p : andre_perms(n, kind)) {
        const Tree t = psi_tree(p);
        CHECK(is_andre_tree(t.get(), kind));
        CHECK(tree_leaf_deg1(t.get()).leaves == perm_stats(p).des);
        CHECK(tree_inv(t.get()) == perm_stats(p).inv);
      }
    }
  }
}

TEST_CASE("tree polynomials specialize to the permutation polynomials") {
  CHECK(andre_tree_poly(1, AndreKind::I) == QPoly::var("x"));
  for (AndreKind kind : {AndreKind::I, AndreKind::II}) {
    for (int n = 1; n <= 5; ++n) {
      QPoly e = andre_tree_poly(n, kind);
      e = substitute(e, var_intern("y"), QPoly(1));
      e = substitute(e, var_intern("x"), QPoly::var("t"));
      CHECK(e == andre_perm_poly(n, kind));
    }
  }

  QPoly e3 = andre_tree_poly(3, AndreKind::II);
  for (const char* v : {"q", "x", "y"})
    e3 = substitute(e3, var_intern(v), QPoly(1));
  CHECK(e3 == QPoly(2));
}

TEST_CASE("named sequences") {
  CHECK(sequence_term("motzkin", 4) == 9);
  CHECK(sequence_term("euler", 4) == 5);
  CHECK(sequence_term("fibonacci", 1) == 1);
  CHECK(sequence_term("motzkin", 0) == 1);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(5, 0) == 1);

  try {
    sequence_term("euler", 24);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::BoundExceeded);
  }
  try {
    sequence_term("catalan", 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnknownName);
  }
  try {
    andre_perms(10, AndreKind::I);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::BoundExceeded);
  }
}

TEST_CASE("tree grammar words trace Motzkin paths") {
  const CatalogEntry& c = get_entry("G_AndI");
  const MasterId X = master_intern("x");
  const MasterId Y = master_intern("y");
  Expr a = c.seed;
  for (int n = 1; n <= 10; ++n) {
    a = derive(c.grammar, a);
    for (const auto& [w, coeff] : a.terms()) {
      const auto& ls = w.letters();
      REQUIRE(!ls.empty());
      CHECK(ls[0] == Letter{X, 0, +1});

      /* One letter per index, indexes strictly increasing within 1..n. */
      std::vector<int> kind(static_cast<std::size_t>(n) + 1, -1);
      bool shape_ok = true;
      int prev = 0;
      for (std::size_t i = 1; i < ls.size(); ++i) {
        const Letter& l = ls[i];
        if (l.sign != +1 || l.index <= prev || l.index > n ||
            (l.master != X && l.master != Y)) {
          shape_ok = false;
          break;
        }
        prev = l.index;
        kind[static_cast<std::size_t>(l.index)] = (l.master == X) ? 1 : 0;
      }
      REQUIRE(shape_ok);

      /* Up for x, level for y, down for a skipped index. */
      int height = 0;
      bool path_ok = true;
      for (int i = 1; i <= n; ++i) {
        const int k = kind[static_cast<std::size_t>(i)];
        height += (k == 1) ? 1 : (k == -1 ? -1 : 0);
        if (height < 0) {
          path_ok = false;
          break;
        }
      }
      CHECK(path_ok);
      CHECK(height == 0);
    }
    CHECK(omega(a) ==
          static_cast<std::size_t>(sequence_term("motzkin", n)));
  }
}

#include "qgram/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qgram/catalog.hpp"
#include "qgram/error.hpp"
#include "qgram/evalmap.hpp"
#include "qgram/freealg.hpp"
#include "qgram/grammar.hpp"
#include "qgram/oracle.hpp"
#include "qgram/qpoly.hpp"
#include "qgram/qseries.hpp"
#include "qgram/textio.hpp"

namespace qgram {
namespace {

using Checks = std::vector<CheckResult>;

std::string clip(std::string s) {
  if (s.size() > 200) {
    s.resize(197);
    s += "...";
  }
  return s;
}

void record(Checks& out, const std::string& name, bool pass,
            const std::string& notes = "") {
  out.push_back({name, pass, pass ? std::string() : clip(notes)});
}

void check_expr(Checks& out, const std::string& name, const Expr& got,
                const Expr& want) {
  record(out, name, got == want,
         "got " + to_text(got) + " | want " + to_text(want));
}

void check_poly(Checks& out, const std::string& name, const QPoly& got,
                const QPoly& want) {
  record(out, name, got == want,
         "got " + to_text(got) + " | want " + to_text(want));
}

void check_series(Checks& out, const std::string& name, const ESeries& got,
                  const ESeries& want) {
  record(out, name, got == want,
         "got " + to_text(got) + " | want " + to_text(want));
}

Letter let(MasterId m, int i, int sign = +1) {
  return Letter{m, i, static_cast<std::int8_t>(sign)};
}

Word wd(std::vector<Letter> ls) { return Word(std::move(ls)); }

Expr we(std::vector<Letter> ls, const QPoly& c = QPoly(1)) {
  return Expr(wd(std::move(ls)), c);
}

long choose2(long n) { return n * (n - 1) / 2; }

/* Coefficient series of u*f(u): (uf)_n = (1 - q^n) f_{n-1}. */
ESeries mul_by_u(const ESeries& f) {
  std::vector<QPoly> c(static_cast<std::size_t>(f.order()) + 1, QPoly(0));
  for (int n = 1; n <= f.order(); ++n)
    c[static_cast<std::size_t>(n)] = (QPoly(1) - q_power(n)) * f[n - 1];
  return ESeries(std::move(c));
}

/* ------------------------------------------------------------------ */
/* 1. Golden expansions of low derivatives against their display form. */

Checks golden_suite(const VerifyOptions&) {
  Checks out;
  const CatalogEntry& tan = get_entry("G_tan");
  check_expr(out, "golden tangent D^1(x[0])", derive_n(tan.grammar, tan.seed, 1),
             parse_expr("1 + x[1]*x[0]"));
  check_expr(out, "golden tangent D^2(x[0])", derive_n(tan.grammar, tan.seed, 2),
             parse_expr("(1+q)*x[1] + x[1]*x[1]*x[0] + q*x[2]*x[1]*x[1]"));

  const CatalogEntry& tanp = get_entry("G_tan_p");
  check_expr(out, "golden left-sorted tangent D^1(x[0])",
             derive_n(tanp.grammar, tanp.seed, 1), parse_expr("1 + x[0]*x[1]"));
  check_expr(out, "golden left-sorted tangent D^2(x[0])",
             derive_n(tanp.grammar, tanp.seed, 2),
             parse_expr("q*x[0] + x[2] + (1+q)*x[0]*x[1]*x[2]"));

  const CatalogEntry& ts = get_entry("G_tan_sec");
  const char* dx[] = {
      "x[0]",
      "1 + x[1]*x[0]",
      "(1+q)*x[1] + x[1]*x[1]*x[0] + q*x[2]*x[1]*x[1]",
      "q + q^2 + (1+q)*x[1]*x[1] + x[1]*x[1]*x[1]*x[0]"
      " + (q^2+q^3)*x[2]*x[2] + (q+q^2)*x[2]*x[2]*x[1]*x[1]"
      " + q*x[2]*x[1]*x[1]*x[1] + (2*q+2*q^2)*x[2]*x[1]"
      " + q^2*x[2]*x[2]*x[2]*x[1] + q^3*x[3]*x[2]*x[2]*x[2]"};
  const char* dy[] = {
      "y[0]",
      "y[1]*x[0]",
      "q*y[2]*x[1]*x[1] + y[1] + x[1]*y[1]*x[0]",
      "q^3*y[3]*x[2]*x[2]*x[2] + q^2*x[2]*y[2] + q^2*x[2]*x[2]*y[2]*x[1]"
      " + (q^2+2*q)*y[2]*x[1] + (q^2+q)*x[2]*y[2]*x[1]*x[1]"
      " + q*y[2]*x[1]*x[1]*x[1] + x[1]*y[1] + x[1]*x[1]*y[1]*x[0]"};
  MasterId Y = master_intern("y");
  for (int n = 0; n <= 3; ++n) {
    check_expr(out, "golden joint family D^" + std::to_string(n) + "(x[0])",
               derive_n(ts.grammar, ts.seed, n), parse_expr(dx[n]));
    check_expr(out, "golden joint family D^" + std::to_string(n) + "(y[0])",
               derive_n(ts.grammar, we({let(Y, 0)}), n), parse_expr(dy[n]));
  }
  return out;
}

/* --------------------------------------------------------- */
/* 2. The four rewriting orders on one two-master two-word sum. */

Checks orders_suite(const VerifyOptions&) {
  Checks out;
  Expr e = parse_expr(
      "x[2]*y[2]^-1*x[1]*x[3]*x[3]*y[3] + (1+q)*y[1]*y[1]*x[1]^-1*x[2]");
  struct Case {
    Order order;
    const char* want;
  };
  const Case cases[] = {
      {Order::KSO,
       "x[2]*y[2]^-1*x[1]*x[3]*x[3]*y[3] + (1+q)*y[1]*y[1]*x[1]^-1*x[2]"},
      {Order::LPO,
       "x[1]*x[2]*x[3]*x[3]*y[2]^-1*y[3] + (1+q)*x[1]^-1*x[2]*y[1]*y[1]"},
      {Order::AIO,
       "x[1]*x[2]*y[2]^-1*x[3]*x[3]*y[3] + (1+q)*x[1]^-1*y[1]*y[1]*x[2]"},
      {Order::DIO,
       "x[3]*x[3]*y[3]*x[2]*y[2]^-1*x[1] + (1+q)*x[2]*x[1]^-1*y[1]*y[1]"},
  };
  for (const Case& c : cases) {
    Grammar probe;
    probe.name = "probe";
    probe.masters = {master_intern("x"), master_intern("y")};
    probe.order = c.order;
    check_expr(out, std::string("order ") + order_name(c.order),
               apply_order(probe, e), parse_expr(c.want));
  }
  return out;
}

/* -------------------------------------------------------------- */
/* 3. Recorded word-count tables and closed-form count laws.        */

Checks counts_suite(const VerifyOptions&) {
  Checks out;
  for (const CatalogEntry& ent : catalog()) {
    int law_to = ent.law ? 12 : 0;
    int upto = std::max(static_cast<int>(ent.counts.size()), law_to);
    Expr cur = ent.seed;
    bool table_ok = true, law_ok = true;
    std::string tnote, lnote;
    for (int n = 1; n <= upto; ++n) {
      cur = derive(ent.grammar, cur);
      unsigned long long w = omega(cur);
      if (n <= static_cast<int>(ent.counts.size()) &&
          ent.counts[static_cast<std::size_t>(n - 1)] != w) {
        table_ok = false;
        tnote += " n=" + std::to_string(n) + " got " + std::to_string(w);
      }
      if (ent.law && n <= law_to && ent.law(n) != w) {
        law_ok = false;
        lnote += " n=" + std::to_string(n) + " got " + std::to_string(w);
      }
    }
    record(out, "counts " + ent.id + " table", table_ok, tnote);
    if (ent.law) record(out, "counts " + ent.id + " law n<=12", law_ok, lnote);
  }
  return out;
}

/* ------------------------------------------------------------------- */
/* 4. Every tangent-grammar word is exactly one of the three shapes      */
/*    x[n]x[n-1]^n, x[1]^n x[0], or x[j+1]^a x[j]^b with the size,       */
/*    range and parity constraints.                                      */

Checks shapes_suite(const VerifyOptions&) {
  Checks out;
  const CatalogEntry& tan = get_entry("G_tan");
  MasterId X = master_intern("x");
  Expr cur = tan.seed;
  for (int n = 1; n <= 10; ++n) {
    cur = derive(tan.grammar, cur);
    if (n < 3) continue;
    bool ok = true;
    std::string note;
    for (const auto& [w, c] : cur.terms()) {
      int matches = 0;
      const auto& ls = w.letters();
      bool plain_x = std::all_of(ls.begin(), ls.end(), [&](const Letter& l) {
        return l.master == X && l.sign == +1;
      });
      if (!plain_x) {
        ok = false;
        note = "non-plain word " + to_text(w) + " at n=" + std::to_string(n);
        break;
      }
      /* shape (i): x[n] x[n-1]^n */
      if (ls.size() == static_cast<std::size_t>(n) + 1 && ls[0].index == n &&
          std::all_of(ls.begin() + 1, ls.end(),
                      [&](const Letter& l) { return l.index == n - 1; }))
        ++matches;
      /* shape (ii): x[1]^n x[0] */
      if (ls.size() == static_cast<std::size_t>(n) + 1 &&
          ls.back().index == 0 &&
          std::all_of(ls.begin(), ls.end() - 1,
                      [&](const Letter& l) { return l.index == 1; }))
        ++matches;
      /* shape (iii): x[j+1]^a x[j]^b, 1 <= j <= n-2, a,b <= n,
         a+b <= n+1, a+b+n+1 even */
      {
        std::vector<int> idx;
        for (const Letter& l : ls) idx.push_back(l.index);
        bool shaped = false;
        auto fits = [&](int j, int a, int b) {
          return 1 <= j && j <= n - 2 && a <= n && b <= n && a + b <= n + 1 &&
                 (a + b + n + 1) % 2 == 0;
        };
        if (idx.empty()) {
          shaped = fits(1, 0, 0);
        } else {
          int hi = idx.front(), lo = idx.back();
          bool sorted_two = std::is_sorted(idx.rbegin(), idx.rend()) &&
                            (hi == lo || hi == lo + 1);
          if (sorted_two) {
            int a = static_cast<int>(std::count(idx.begin(), idx.end(), hi));
            int b = static_cast<int>(idx.size()) - a;
            if (hi == lo) {
              int c2 = static_cast<int>(idx.size());
              shaped = fits(hi, 0, c2) || fits(hi - 1, c2, 0);
            } else {
              shaped = fits(lo, a, b);
            }
          }
        }
        if (shaped) ++matches;
      }
      if (matches != 1) {
        ok = false;
        note = "word " + to_text(w) + " matches " + std::to_string(matches) +
               " shapes at n=" + std::to_string(n);
        break;
      }
    }
    record(out, "shapes tangent words n=" + std::to_string(n), ok, note);
  }
  return out;
}

/* ----------------------------------------------------------------- */
/* 5. Grammar images equal the Eulerian polynomials of maj and inv.    */

Checks eulerian_suite(const VerifyOptions&) {
  Checks out;
  struct Case {
    const char* id;
    const char* stat;
  };
  const Case cases[] = {{"G_maj", "maj"}, {"G_inv", "inv"}};
  for (const Case& c : cases) {
    const CatalogEntry& ent = get_entry(c.id);
    Expr cur = ent.seed;
    for (int n = 1; n <= 7; ++n) {
      cur = derive(ent.grammar, cur);
      check_poly(out,
                 std::string("eulerian ") + c.id + " " + c.stat +
                     " n=" + std::to_string(n),
                 evaluate(ent.eval, cur), eulerian_poly(n, c.stat));
    }
  }
  return out;
}

/* ------------------------------------------------------------------ */
/* 6. Cycle-grammar images equal the Roselle polynomials times e.       */

Checks roselle_suite(const VerifyOptions&) {
  Checks out;
  const CatalogEntry& ent = get_entry("G_cyc");
  QPoly ev = QPoly::var("e");
  Expr cur = ent.seed;
  for (int n = 1; n <= 6; ++n) {
    cur = derive(ent.grammar, cur);
    check_poly(out, "roselle cycle grammar n=" + std::to_string(n),
               evaluate(ent.eval, cur), ev * roselle_poly(n));
  }
  return out;
}

/* ------------------------------------------------------------------ */
/* 7. Grammar images equal the Andre tree polynomials, their descent-   */
/*    inversion specialisation, and the Euler numbers at q=x=y=1.       */

Checks andre_suite(const VerifyOptions&) {
  Checks out;
  struct Case {
    const char* id;
    AndreKind kind;
    const char* tables[6];
  };
  const Case cases[] = {
      {"G_AndI",
       AndreKind::I,
       {"t", "t", "t + q*t^2", "t + (2*q+2*q^2)*t^2",
        "t + (3*q+4*q^2+3*q^3+q^4)*t^2 + (q^2+q^3+2*q^4)*t^3", nullptr}},
      {"G_AndII",
       AndreKind::II,
       {"t", "t", "t + q^2*t^2", "t + (2*q^2+q^3+q^4)*t^2",
        "t + (3*q^2+2*q^3+3*q^4+q^5+2*q^6)*t^2 + (q^4+q^5+q^6+q^8)*t^3",
        nullptr}},
  };
  VarId xid = var_intern("x");
  VarId yid = var_intern("y");
  VarId qid = q_id();
  for (const Case& c : cases) {
    const CatalogEntry& ent = get_entry(c.id);
    Expr cur = ent.seed;
    for (int n = 0; n <= 6; ++n) {
      if (n > 0) cur = derive(ent.grammar, cur);
      QPoly img = evaluate(ent.eval, cur);
      check_poly(out,
                 std::string("andre ") + c.id + " tree polynomial n=" +
                     std::to_string(n),
                 img, andre_tree_poly(n + 1, c.kind));
      if (n + 1 <= 5) {
        QPoly spec = substitute(substitute(img, yid, QPoly(1)), xid,
                                QPoly::var("t"));
        check_poly(out,
                   std::string("andre ") + c.id +
                       " descent-inversion table n=" + std::to_string(n),
                   spec, parse_qpoly(c.tables[n + 1 - 1]));
      }
      QPoly num = substitute(
          substitute(substitute(img, yid, QPoly(1)), xid, QPoly(1)), qid,
          QPoly(1));
      check_poly(out,
                 std::string("andre ") + c.id + " Euler number n=" +
                     std::to_string(n),
                 num,
                 QPoly(static_cast<long>(sequence_term("euler", n + 1))));
    }
  }
  return out;
}

/* ------------------------------------------------- */
/* 8. Randomized calculus laws on q-linear grammars.   */

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t s) : g(s) {}
  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
  }
};

QPoly random_coeff(Rng& r) {
  long c = 0;
  while (c == 0) c = r.pick(-3, 3);
  return QPoly(c) * q_power(r.pick(0, 2));
}

Word random_word(Rng& r, const std::vector<MasterId>& ms, int maxlen,
                 int maxidx, bool inv_ok) {
  std::vector<Letter> ls;
  int len = static_cast<int>(r.pick(0, maxlen));
  for (int i = 0; i < len; ++i) {
    MasterId m = ms[static_cast<std::size_t>(
        r.pick(0, static_cast<long>(ms.size()) - 1))];
    int idx = static_cast<int>(r.pick(0, maxidx));
    int s = (inv_ok && r.pick(0, 3) == 0) ? -1 : +1;
    ls.push_back(let(m, idx, s));
  }
  return wd(std::move(ls));
}

Expr random_expr(Rng& r, const std::vector<MasterId>& ms, int maxterms,
                 int maxlen, int maxidx, bool inv_ok) {
  Expr e;
  int t = static_cast<int>(r.pick(1, maxterms));
  for (int i = 0; i < t; ++i)
    e.add_term(random_word(r, ms, maxlen, maxidx, inv_ok), random_coeff(r));
  return e;
}

/* Shift-condition grammar with random bodies: coefficient q^(j+b) c0 and
   one or two signed words of relative letters. */
Grammar random_qlinear(Rng& r, int tag) {
  Grammar g;
  g.name = "rand" + std::to_string(tag);
  g.masters = {master_intern("x"), master_intern("y")};
  g.order = Order::KSO;
  for (MasterId m : g.masters) {
    Rule rule;
    rule.a = 1;
    rule.b = r.pick(0, 1);
    long kind = r.pick(0, 3);
    rule.c0 = kind == 0 ? QPoly(1) + q_power(1)
                        : kind == 1 ? QPoly::var("beta") : QPoly(1);
    int nsum = static_cast<int>(r.pick(1, 2));
    for (int s = 0; s < nsum; ++s) {
      TSummand ts;
      ts.sign = r.pick(0, 4) == 0 ? -1 : +1;
      int len = static_cast<int>(r.pick(0, 3));
      for (int i = 0; i < len; ++i) {
        TLetter tl;
        tl.master = g.masters[static_cast<std::size_t>(
            r.pick(0, static_cast<long>(g.masters.size()) - 1))];
        tl.index = IndexExpr{true, r.pick(0, 2)};
        tl.sign = +1;
        ts.word.push_back(tl);
      }
      rule.words.push_back(ts);
    }
    g.rules[m] = rule;
  }
  return g;
}

Checks calculus_suite(const VerifyOptions& opt) {
  Checks out;
  Rng rng(opt.seed);
  int C = std::max(opt.cases, 1);

  std::vector<Grammar> pool;
  pool.push_back(get_entry("G_cyc").grammar);
  pool.push_back(get_entry("G_binv").grammar);
  for (int i = 0; i < 6; ++i) pool.push_back(random_qlinear(rng, i));
  bool qlin = std::all_of(pool.begin(), pool.end(), [](const Grammar& g) {
    return is_q_linear(g) && satisfies_shift(g);
  });
  record(out, "calculus grammar pool is q-linear", qlin, "");

  auto pick_grammar = [&]() -> const Grammar& {
    return pool[static_cast<std::size_t>(
        rng.pick(0, static_cast<long>(pool.size()) - 1))];
  };

  {
    bool ok = true;
    std::string note;
    for (int c = 0; c < C && ok; ++c) {
      const Grammar& g = pick_grammar();
      Expr f = random_expr(rng, g.masters, 3, 3, 2, true);
      Expr h = random_expr(rng, g.masters, 3, 3, 2, true);
      QPoly al = random_coeff(rng), be = random_coeff(rng);
      Expr lhs = derive(g, expr_add(expr_scale(al, f), expr_scale(be, h)));
      Expr rhs =
          expr_add(expr_scale(al, derive(g, f)), expr_scale(be, derive(g, h)));
      if (!(lhs == rhs)) {
        ok = false;
        note = "case " + std::to_string(c) + " grammar " + g.name;
      }
    }
    record(out, "calculus linearity " + std::to_string(C) + " cases", ok, note);
  }

  {
    bool ok = true;
    std::string note;
    for (int c = 0; c < C && ok; ++c) {
      const Grammar& g = pick_grammar();
      Expr f = random_expr(rng, g.masters, 2, 3, 2, true);
      Expr h = random_expr(rng, g.masters, 2, 3, 2, true);
      Expr lhs = derive(g, expr_mul(f, h));
      Expr rhs = expr_add(expr_mul(derive(g, f), up_arrow(h, 1)),
                          expr_mul(f, derive(g, h)));
      if (!(lhs == rhs)) {
        ok = false;
        note = "case " + std::to_string(c) + " grammar " + g.name;
      }
    }
    record(out, "calculus product rule " + std::to_string(C) + " cases", ok,
           note);
  }

  {
    bool ok = true;
    std::string note;
    for (int c = 0; c < C && ok; ++c) {
      const Grammar& g = pick_grammar();
      Word w;
      while (w.empty()) w = random_word(rng, g.masters, 3, 2, true);
      QPoly cf = (rng.pick(0, 1) ? QPoly(1) : QPoly(-1)) *
                 q_power(rng.pick(0, 2));
      Expr a(w, cf);
      Expr ainv(w.inverse(), invert_monomial(cf));
      Expr lhs = derive(g, ainv);
      Expr rhs =
          expr_neg(expr_mul(expr_mul(ainv, derive(g, a)), up_arrow(ainv, 1)));
      if (!(lhs == rhs)) {
        ok = false;
        note = "case " + std::to_string(c) + " grammar " + g.name;
      }
    }
    record(out, "calculus inverse rule " + std::to_string(C) + " cases", ok,
           note);
  }

  {
    bool ok = true;
    std::string note;
    for (int c = 0; c < C && ok; ++c) {
      const Grammar& g = pick_grammar();
      int n = static_cast<int>(rng.pick(2, 4));
      Expr f = random_expr(rng, g.masters, 2, 2, 2, true);
      Expr h = random_expr(rng, g.masters, 2, 2, 2, true);
      Expr lhs = derive_n(g, expr_mul(f, h), n);
      Expr rhs;
      for (int k = 0; k <= n; ++k)
        rhs = expr_add(rhs, expr_scale(qbinom(n, k),
                                       expr_mul(derive_n(g, f, k),
                                                up_arrow(derive_n(g, h, n - k),
                                                         k))));
      if (!(lhs == rhs)) {
        ok = false;
        note = "case " + std::to_string(c) + " n=" + std::to_string(n) +
               " grammar " + g.name;
      }
    }
    record(out, "calculus q-Leibniz " + std::to_string(C) + " cases", ok, note);
  }

  {
    bool ok = true;
    std::string note;
    for (int c = 0; c < C && ok; ++c) {
      const Grammar& g = pick_grammar();
      int n = static_cast<int>(rng.pick(1, 3));
      int m = static_cast<int>(rng.pick(1, 3));
      Expr f = random_expr(rng, g.masters, 3, 3, 2, true);
      Expr lhs = derive_n(g, up_arrow(f, m), n);
      Expr rhs = expr_scale(q_power(static_cast<long>(n) * m),
                            up_arrow(derive_n(g, f, n), m));
      if (!(lhs == rhs)) {
        ok = false;
        note = "case " + std::to_string(c) + " n=" + std::to_string(n) +
               " m=" + std::to_string(m) + " grammar " + g.name;
      }
    }
    record(out, "calculus shift commutation " + std::to_string(C) + " cases",
           ok, note);
  }

  {
    bool ok = true;
    std::string note;
    const char* ids[] = {"G_inv", "G_cyc", "G_AndI", "G_AndII", "G_tan_sec"};
    for (int c = 0; c < C && ok; ++c) {
      const CatalogEntry& ent = get_entry(ids[c % 5]);
      int n = static_cast<int>(rng.pick(1, 5));
      Expr f = random_expr(rng, ent.grammar.masters, 2, 2, 1, true);
      Expr h = random_expr(rng, ent.grammar.masters, 2, 2, 1, true);
      QPoly lhs = evaluate(ent.eval, derive_n(ent.grammar, expr_mul(f, h), n));
      QPoly rhs;
      for (int k = 0; k <= n; ++k)
        rhs = rhs + qbinom(n, k) *
                        evaluate(ent.eval, derive_n(ent.grammar, f, k)) *
                        evaluate(ent.eval, derive_n(ent.grammar, h, n - k));
      if (!(lhs == rhs)) {
        ok = false;
        note = "case " + std::to_string(c) + " n=" + std::to_string(n) +
               " grammar " + ent.id;
      }
    }
    record(out,
           "calculus image convolution " + std::to_string(C) + " cases", ok,
           note);
  }

  return out;
}

/* --------------------------------------------------------------------- */
/* 9. Series identities: q-exponential quotients for the inversion        */
/*    grammar, tangent and secant generating functions, the cycle-grammar */
/*    functional equation, inverse-letter closed forms, the q-binomial    */
/*    inversion pair, and the q-trigonometric derivatives.                */

void stanley_checks(Checks& out, int N) {
  const CatalogEntry& ent = get_entry("G_inv");
  MasterId X = master_intern("x");
  MasterId Y = master_intern("y");
  QPoly xv = QPoly::var("x");
  QPoly yv = QPoly::var("y");
  QPoly xiy = QPoly::var("x", -1) * yv;
  QPoly xyi = xv * QPoly::var("y", -1);
  ESeries one = series_one(N);
  for (int i = 0; i <= 2; ++i) {
    ESeries eqi = series_subst_q(std_series("e_q", N, xv - yv), i);
    ESeries Eqi = series_subst_q(std_series("E_q", N, yv - xv), i);
    ESeries denom = series_sub(one, series_scale(xiy, eqi));
    ESeries A = gen(ent.grammar, ent.eval, we({let(X, i)}), N);
    check_series(out, "series eulerian-inv quotient i=" + std::to_string(i),
                 series_mul(A, denom), series_scale(xv - yv, one));
    ESeries B = gen(ent.grammar, ent.eval, we({let(X, i, -1)}), N);
    check_series(out,
                 "series eulerian-inv reciprocal x i=" + std::to_string(i),
                 series_scale(xv - yv, B), denom);
    ESeries Cc = gen(ent.grammar, ent.eval, we({let(Y, i, -1)}), N);
    check_series(out,
                 "series eulerian-inv reciprocal y i=" + std::to_string(i),
                 series_scale(yv - xv, Cc),
                 series_sub(one, series_scale(xyi, Eqi)));
  }
}

Checks series_suite(const VerifyOptions& opt) {
  Checks out;
  const int N = std::max(opt.order, 2);
  QPoly xv = QPoly::var("x");
  QPoly yv = QPoly::var("y");
  QPoly zv = QPoly::var("z");
  QPoly bv = QPoly::var("beta");
  QPoly yinv = QPoly::var("y", -1);
  ESeries one = series_one(N);

  stanley_checks(out, N);

  /* Tangent and secant generating functions for the joint family. */
  {
    const CatalogEntry& ent = get_entry("G_tan_sec");
    MasterId X = master_intern("x");
    MasterId Y = master_intern("y");
    Grammar hat = ent.grammar;
    hat.order = Order::KSO;

    bool ok = true;
    std::string note;
    Expr yi = we({let(Y, 0, -1)});
    Expr yix = we({let(Y, 0, -1), let(X, 0)});
    Expr cy = yi, cyx = yix;
    for (int n = 1; n <= 8 && ok; ++n) {
      cy = derive(hat, cy);
      cyx = derive(hat, cyx);
      int m = n / 2;
      Expr want_y = n % 2 == 0
                        ? expr_scale(QPoly(m % 2 == 0 ? 1 : -1), yi)
                        : expr_scale(QPoly(m % 2 == 0 ? -1 : 1), yix);
      Expr want_yx = n % 2 == 0
                         ? expr_scale(QPoly(m % 2 == 0 ? 1 : -1), yix)
                         : expr_scale(QPoly(m % 2 == 0 ? 1 : -1), yi);
      if (!(cy == want_y && cyx == want_yx)) {
        ok = false;
        note = "n=" + std::to_string(n);
      }
    }
    record(out, "series secant reciprocal derivative pattern n<=8", ok, note);

    ESeries cosq = std_series("cos_q", N);
    ESeries sinq = std_series("sin_q", N);
    ESeries tanq = std_series("tan_q", N);
    ESeries secq = std_series("sec_q", N);
    ESeries Secq = std_series("Sec_q", N);
    ESeries xsin = series_scale(xv, sinq);
    ESeries cmxs = series_sub(cosq, xsin);

    ESeries geny = gen(ent.grammar, ent.eval, we({let(Y, 0)}), N);
    ESeries genx = gen(ent.grammar, ent.eval, ent.seed, N);
    ESeries genyi = gen(hat, ent.eval, yi, N);
    ESeries genyix = gen(hat, ent.eval, yix, N);

    check_series(out, "series secant family y quotient",
                 series_mul(geny, cmxs), series_scale(yv, one));
    check_series(out, "series secant family x quotient",
                 series_mul(genx, cmxs),
                 series_add(series_scale(xv, cosq), sinq));
    check_series(out, "series secant family y reciprocal", genyi,
                 series_scale(yinv, cmxs));
    check_series(out, "series secant family mixed reciprocal", genyix,
                 series_scale(yinv, series_add(series_scale(xv, cosq), sinq)));
    check_series(out, "series tangent-secant y form",
                 series_mul(geny, series_sub(one, series_scale(xv, tanq))),
                 series_scale(yv, secq));
    check_series(out, "series tangent-secant x form",
                 series_mul(genx, series_sub(one, series_scale(xv, tanq))),
                 series_add(series_mul(tanq,
                                       series_sub(one, series_scale(xv, tanq))),
                            series_scale(xv, series_mul(secq, Secq))));

    check_series(out, "series order-insensitive image x seed",
                 gen(hat, ent.eval, ent.seed, N), genx);
    check_series(out, "series order-insensitive image y seed",
                 gen(hat, ent.eval, we({let(Y, 0)}), N), geny);
    int M = std::min(N, 6);
    check_series(out, "series order-insensitive image reciprocal seed",
                 gen(ent.grammar, ent.eval, yi, M),
                 gen(hat, ent.eval, yi, M));
    check_series(out, "series order-insensitive image mixed seed",
                 gen(ent.grammar, ent.eval, yix, M),
                 gen(hat, ent.eval, yix, M));
  }

  /* Cycle-grammar functional equation and its factor closed forms. */
  {
    const CatalogEntry& ent = get_entry("G_cyc");
    MasterId E = master_intern("e");
    MasterId Z = master_intern("z");
    ESeries genE = gen(ent.grammar, ent.eval, ent.seed, N);
    ESeries genZ = gen(ent.grammar, ent.eval, we({let(Z, 1)}), N);
    ESeries genEZ =
        gen(ent.grammar, ent.eval, we({let(E, 0), let(Z, 1)}), N);

    check_series(out, "series cycle shift difference",
                 series_sub(genE, series_subst_q(genE, 1)),
                 series_scale(bv, mul_by_u(genEZ)));
    check_series(out, "series cycle product split", genEZ,
                 series_mul(genE, genZ));
    check_series(out, "series cycle functional equation",
                 series_mul(genE,
                            series_sub(one, series_scale(bv, mul_by_u(genZ)))),
                 series_subst_q(genE, 1));

    QPoly xiy = QPoly::var("x", -1) * yv;
    for (int k = 0; k <= 2; ++k) {
      ESeries eqk = series_subst_q(std_series("e_q", N, xv - yv), k + 1);
      ESeries lhs = series_mul(series_subst_q(genZ, k),
                               series_sub(one, series_scale(xiy, eqk)));
      ESeries rhs = series_add(series_scale(zv - yv, one),
                               series_scale(xiy * (xv - zv), eqk));
      check_series(out, "series cycle factor form k=" + std::to_string(k),
                   lhs, rhs);
    }
  }

  /* Inverse-letter closed forms for the inversion grammar, n <= 6. */
  {
    const CatalogEntry& ent = get_entry("G_inv");
    const Grammar& g = ent.grammar;
    MasterId X = master_intern("x");
    MasterId Y = master_intern("y");
    bool ok = true;
    std::string note;
    for (int i = 0; i <= 2 && ok; ++i) {
      if (!derive(g, expr_add(we({let(X, i)}), expr_neg(we({let(Y, i)}))))
               .is_zero()) {
        ok = false;
        note = "difference not constant at i=" + std::to_string(i);
        break;
      }
      for (int n = 1; n <= 6 && ok; ++n) {
        /* Ascending binomial products: each derivative step appends the
           factor at the next index, since the product rule shifts the
           untouched right factor. */
        Expr prod1 = Expr::one();
        for (int k = 1; k <= n - 1; ++k)
          prod1 = expr_mul(prod1, expr_add(we({let(Y, i + k)}),
                                           expr_neg(we({let(X, i + k)}))));
        Expr prod2 = expr_mul(prod1, expr_add(we({let(Y, i + n)}),
                                              expr_neg(we({let(X, i + n)}))));
        Expr xbin1 = Expr::one();
        for (int k = 1; k <= n - 1; ++k)
          xbin1 = expr_mul(xbin1, expr_add(we({let(X, i + k)}),
                                           expr_neg(we({let(Y, i + k)}))));
        Expr xbin2 = expr_mul(xbin1, expr_add(we({let(X, i + n)}),
                                              expr_neg(we({let(Y, i + n)}))));

        Expr got1 = derive_n(g, we({let(X, i, -1)}), n);
        Expr want1 = apply_order(
            g, expr_neg(expr_scale(
                   q_power(static_cast<long>(n) * i),
                   expr_mul(we({let(X, i, -1), let(Y, i)}), xbin1))));
        Expr got2 = derive_n(g, we({let(X, i, -1), let(Y, i)}), n);
        Expr want2 = apply_order(
            g, expr_scale(q_power(static_cast<long>(n) * i),
                          expr_mul(we({let(X, i, -1), let(Y, i)}), xbin2)));
        Expr got3 = derive_n(g, we({let(X, i + 1), let(Y, i + 1, -1)}), n);
        Expr want3 = apply_order(
            g, expr_scale(
                   q_power(static_cast<long>(n) * i + choose2(n + 1)),
                   expr_mul(prod2,
                            we({let(X, i + n + 1), let(Y, i + n + 1, -1)}))));
        Expr got4 = derive_n(g, we({let(Y, i, -1)}), n);
        Expr want4 = apply_order(
            g, expr_neg(expr_scale(
                   q_power(choose2(n) + static_cast<long>(n) * i),
                   expr_mul(prod1,
                            we({let(X, i + n), let(Y, i + n, -1)})))));
        if (!(got1 == want1 && got2 == want2 && got3 == want3 &&
              got4 == want4)) {
          ok = false;
          note = "i=" + std::to_string(i) + " n=" + std::to_string(n);
        }
      }
    }
    record(out, "series inverse-letter closed forms n<=6", ok, note);
  }

  /* q-binomial inversion pair for the binomial grammar, n <= 8. */
  {
    const CatalogEntry& ent = get_entry("G_binv");
    const Grammar& g = ent.grammar;
    MasterId X = master_intern("x");
    MasterId Y = master_intern("y");
    bool ok = true;
    std::string note;
    Expr xy = we({let(X, 0), let(Y, 0)});
    for (int n = 0; n <= 8 && ok; ++n) {
      Expr dxn = derive_n(g, we({let(X, 0)}), n);
      Expr dyn = derive_n(g, we({let(Y, 0)}), n);
      Expr dyin = derive_n(g, we({let(Y, 0, -1)}), n);
      bool base =
          dxn == we({let(X, n)}, q_power(choose2(n))) &&
          dyn == we({let(Y, 0)}) &&
          dyin == we({let(Y, n, -1)},
                     QPoly(n % 2 == 0 ? 1 : -1) * q_power(choose2(n)));
      Expr lhs1 = derive_n(g, xy, n);
      Expr rhs1;
      for (int k = 0; k <= n; ++k)
        rhs1 = expr_add(rhs1, we({let(X, k), let(Y, k)},
                                 qbinom(n, k) * q_power(choose2(k))));
      Expr lhs2 = we({let(X, n), let(Y, n)}, q_power(choose2(n)));
      Expr rhs2;
      for (int k = 0; k <= n; ++k)
        rhs2 = expr_add(
            rhs2,
            expr_scale(QPoly((n - k) % 2 == 0 ? 1 : -1) * qbinom(n, k) *
                           q_power(choose2(n - k)),
                       derive_n(g, xy, k)));
      if (!base || !(lhs1 == rhs1) || !(lhs2 == rhs2)) {
        ok = false;
        note = "n=" + std::to_string(n);
      }
    }
    record(out, "series q-binomial inversion pair n<=8", ok, note);
  }

  /* q-trigonometric derivatives. */
  {
    ESeries tanq = std_series("tan_q", N);
    ESeries secq = std_series("sec_q", N);
    ESeries Secq = std_series("Sec_q", N);
    check_series(out, "series q-tangent derivative", series_dq(tanq),
                 series_truncate(
                     series_add(one, series_mul(tanq, series_subst_q(tanq, 1))),
                     N - 1));
    check_series(out, "series q-secant derivative", series_dq(secq),
                 series_truncate(series_mul(series_subst_q(secq, 1), tanq),
                                 N - 1));
    check_series(out, "series q-Secant derivative", series_dq(Secq),
                 series_truncate(series_mul(Secq, series_subst_q(tanq, 1)),
                                 N - 1));
  }

  return out;
}

Checks qeulerian_suite(const VerifyOptions& opt) {
  Checks out;
  stanley_checks(out, std::max(opt.order, 2));
  return out;
}

/* ----------------------------------------------------------- */
/* 10. Convolution recurrences for the Andre grammar images.     */

Checks recurrences_suite(const VerifyOptions&) {
  Checks out;
  struct Case {
    const char* id;
    int mult;
  };
  const Case cases[] = {{"G_AndI", 1}, {"G_AndII", 2}};
  QPoly yv = QPoly::var("y");
  for (const Case& c : cases) {
    const CatalogEntry& ent = get_entry(c.id);
    std::vector<QPoly> E(9);
    E[0] = QPoly::var("x");
    Expr cur = ent.seed;
    E[1] = evaluate(ent.eval, cur);
    for (int n = 2; n <= 8; ++n) {
      cur = derive(ent.grammar, cur);
      E[static_cast<std::size_t>(n)] = evaluate(ent.eval, cur);
    }
    bool ok = true;
    std::string note;
    for (int n = 1; n <= 7 && ok; ++n) {
      QPoly rhs = yv * E[static_cast<std::size_t>(n)];
      for (int k = 0; k <= n - 2; ++k)
        rhs = rhs + q_power(static_cast<long>(c.mult) * (n - k - 1)) *
                        qbinom(n - 1, k) * E[static_cast<std::size_t>(k + 1)] *
                        E[static_cast<std::size_t>(n - k - 1)];
      if (!(E[static_cast<std::size_t>(n + 1)] == rhs)) {
        ok = false;
        note = "n=" + std::to_string(n);
      }
    }
    record(out, std::string("recurrence ") + c.id + " n<=7", ok, note);
  }
  return out;
}

/* ------------------------------------------------------- */
/* 11. Statistic transport along the two bijections.         */

Checks bijections_suite(const VerifyOptions&) {
  Checks out;
  {
    bool ok = true;
    std::string note;
    for (int n = 1; n <= 7 && ok; ++n) {
      Perm p(static_cast<std::size_t>(n));
      std::iota(p.begin(), p.end(), 1);
      do {
        PermStats ss = perm_stats(p);
        Perm img = psi_cycle_map(p);
        PermStats ps = perm_stats(img);
        if (!(ss.exc == ps.iasc && ss.drop == ps.des - 1 &&
              ss.fix == ps.isol && cycle_count(p) == ps.rlmin)) {
          ok = false;
          note = "permutation size " + std::to_string(n);
          break;
        }
      } while (std::next_permutation(p.begin(), p.end()));
    }
    record(out, "bijection cycle map transport n<=7", ok, note);
  }
  for (AndreKind kind : {AndreKind::I, AndreKind::II}) {
    bool ok = true;
    std::string note;
    const char* kname = kind == AndreKind::I ? "kind I" : "kind II";
    for (int n = 1; n <= 8 && ok; ++n) {
      for (const Perm& p : andre_perms(n, kind)) {
        Tree t = psi_tree(p);
        PermStats st = perm_stats(p);
        TreeShape sh = tree_leaf_deg1(t.get());
        if (!(sh.leaves == st.des && tree_inv(t.get()) == st.inv &&
              is_andre_tree(t.get(), kind) && tree_to_perm(t.get()) == p)) {
          ok = false;
          note = "size " + std::to_string(n);
          break;
        }
      }
    }
    record(out, std::string("bijection increasing tree transport ") + kname +
                    " n<=8",
           ok, note);
  }
  return out;
}

struct SuiteDef {
  const char* name;
  Checks (*fn)(const VerifyOptions&);
};

const SuiteDef kSuites[] = {
    {"golden", golden_suite},       {"orders", orders_suite},
    {"counts", counts_suite},       {"shapes", shapes_suite},
    {"eulerian", eulerian_suite},   {"roselle", roselle_suite},
    {"andre", andre_suite},         {"calculus", calculus_suite},
    {"series", series_suite},       {"q-eulerian", qeulerian_suite},
    {"recurrences", recurrences_suite}, {"bijections", bijections_suite},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> v;
  for (const SuiteDef& s : kSuites) v.push_back(s.name);
  v.push_back("all");
  return v;
}

std::vector<CheckResult> run_suite(const std::string& name,
                                   const VerifyOptions& opt) {
  if (name == "all") {
    Checks all;
    for (const SuiteDef& s : kSuites) {
      Checks part = s.fn(opt);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  for (const SuiteDef& s : kSuites)
    if (name == s.name) return s.fn(opt);
  fail(Err::UnknownName, "no verification suite named " + name);
}

}  // namespace qgram

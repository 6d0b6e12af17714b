#include "qgram/grammar.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qgram {

const char* order_name(Order o) {
  switch (o) {
    case Order::KSO: return "KSO";
    case Order::LPO: return "LPO";
    case Order::AIO: return "AIO";
    case Order::DIO: return "DIO";
  }
  return "KSO";
}

std::optional<Order> order_from_name(const std::string& name) {
  if (name == "KSO") return Order::KSO;
  if (name == "LPO") return Order::LPO;
  if (name == "AIO") return Order::AIO;
  if (name == "DIO") return Order::DIO;
  return std::nullopt;
}

Expr Rule::instantiate(long j) const {
  QPoly coeff = c0 * q_power(a * j + b);
  Expr out;
  for (const TSummand& s : words) {
    std::vector<Letter> ls;
    ls.reserve(s.word.size());
    for (const TLetter& tl : s.word) {
      long idx = tl.index.at(j);
      if (idx < 0)
        fail(Err::SemanticError, "rule letter index is negative at j=" +
                                     std::to_string(j));
      ls.push_back({tl.master, static_cast<int>(idx), tl.sign});
    }
    out.add_term(Word(std::move(ls)), s.sign < 0 ? -coeff : coeff);
  }
  return out;
}

int Grammar::priority(MasterId m) const {
  for (std::size_t i = 0; i < masters.size(); ++i)
    if (masters[i] == m) return static_cast<int>(i);
  fail(Err::UnknownMaster, "master " + master_name(m) + " is not declared");
}

namespace {

/* Order key of one letter; the sign never participates. */
std::pair<long, long> order_key(const Grammar& g, Order o, const Letter& l) {
  switch (o) {
    case Order::KSO: return {0, 0};
    case Order::LPO: return {g.priority(l.master), l.index};
    case Order::AIO: return {l.index, g.priority(l.master)};
    case Order::DIO: return {-static_cast<long>(l.index), g.priority(l.master)};
  }
  return {0, 0};
}

Word reorder_word(const Grammar& g, const Word& w, DeriveStats* stats) {
  std::vector<Letter> ls = w.letters();
  std::stable_sort(ls.begin(), ls.end(), [&](const Letter& a, const Letter& b) {
    return order_key(g, g.order, a) < order_key(g, g.order, b);
  });
  std::size_t before = ls.size();
  Word out{std::move(ls)};
  if (stats && out.size() < before) stats->reorder_cancellation = true;
  return out;
}

void add_into(Expr& dst, const Expr& src) {
  for (const auto& [w, c] : src.terms()) dst.add_term(w, c);
}

/* Derivative of a single word, order applied, coefficient not yet attached. */
Expr derive_word(const Grammar& g, const Word& w, DeriveStats* stats) {
  const auto& ls = w.letters();
  Expr acc;
  for (std::size_t j = 0; j < ls.size(); ++j) {
    Word prefix{std::vector<Letter>(ls.begin(), ls.begin() + j)};
    std::vector<Letter> tail(ls.begin() + j + 1, ls.end());
    Word suffix = Word{std::move(tail)}.shifted(1);
    Expr term = expr_mul(expr_mul(Expr(prefix), rule_apply(g, ls[j])),
                         Expr(suffix));
    add_into(acc, term);
  }
  return apply_order(g, acc, stats);
}

}  // namespace

Expr apply_order(const Grammar& g, const Expr& a, DeriveStats* stats) {
  if (g.order == Order::KSO) return a;
  Expr out;
  for (const auto& [w, c] : a.terms()) out.add_term(reorder_word(g, w, stats), c);
  return out;
}

Expr rule_apply(const Grammar& g, const Letter& s) {
  auto it = g.rules.find(s.master);
  if (it == g.rules.end())
    fail(Err::UnknownMaster, "no rule for master " + master_name(s.master));
  Expr body = it->second.instantiate(s.index);
  if (s.sign > 0) return body;
  Expr left(Word::letter(s.master, s.index, -1));
  Expr right(Word::letter(s.master, s.index + 1, -1));
  return expr_neg(expr_mul(expr_mul(left, body), right));
}

Expr derive_serial(const Grammar& g, const Expr& a, DeriveStats* stats) {
  Expr out;
  for (const auto& [w, c] : a.terms())
    add_into(out, expr_scale(c, derive_word(g, w, stats)));
  return out;
}

Expr derive_parallel(const Grammar& g, const Expr& a, DeriveStats* stats) {
#ifdef _OPENMP
  std::vector<const std::pair<const Word, QPoly>*> terms;
  terms.reserve(a.term_count());
  for (const auto& t : a.terms()) terms.push_back(&t);

  int nt = omp_get_max_threads();
  std::vector<Expr> partial(nt);
  std::vector<char> cancel(nt, 0);

#pragma omp parallel
  {
    int tid = omp_get_thread_num();
    DeriveStats local;
#pragma omp for schedule(dynamic, 8)
    for (long i = 0; i < static_cast<long>(terms.size()); ++i) {
      add_into(partial[tid],
               expr_scale(terms[i]->second, derive_word(g, terms[i]->first, &local)));
    }
    if (local.reorder_cancellation) cancel[tid] = 1;
  }

  Expr out;
  for (int t = 0; t < nt; ++t) add_into(out, partial[t]);
  if (stats)
    for (int t = 0; t < nt; ++t)
      if (cancel[t]) stats->reorder_cancellation = true;
  return out;
#else
  return derive_serial(g, a, stats);
#endif
}

Expr derive(const Grammar& g, const Expr& a, DeriveStats* stats) {
#ifdef _OPENMP
  if (a.term_count() >= 64) return derive_parallel(g, a, stats);
#endif
  return derive_serial(g, a, stats);
}

Expr derive_n(const Grammar& g, const Expr& a, int n, DeriveStats* stats) {
  Expr out = a;
  for (int i = 0; i < n; ++i) out = derive(g, out, stats);
  return out;
}

bool is_q_linear(const Grammar& g) {
  if (g.order != Order::KSO) return false;
  return satisfies_shift(g);
}

bool satisfies_shift(const Grammar& g) {
  for (const auto& [m, r] : g.rules) {
    if (r.a != 1) return false;
    for (const TSummand& s : r.words)
      for (const TLetter& tl : s.word)
        if (!tl.index.relative) return false;
  }
  return true;
}

}  // namespace qgram

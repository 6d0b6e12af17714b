#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgram/freealg.hpp"
#include "qgram/qpoly.hpp"

namespace qgram {

/*
 * Rewriting orders.  Each ranks the letters of a word by a key that ignores
 * the sign; the stable sort keeps equal keys in place and the result is
 * re-reduced afterwards.
 *   KSO  keep the word as written
 *   LPO  master priority, then index
 *   AIO  index, then master priority
 *   DIO  index descending, then master priority
 */
enum class Order { KSO, LPO, AIO, DIO };

const char* order_name(Order o);
std::optional<Order> order_from_name(const std::string& name);

/* Letter index inside a rule: j + offset, or a fixed offset. */
struct IndexExpr {
  bool relative = true;
  long offset = 0;

  long at(long j) const { return relative ? j + offset : offset; }

  friend bool operator==(const IndexExpr&, const IndexExpr&) = default;
};

struct TLetter {
  MasterId master = 0;
  IndexExpr index;
  std::int8_t sign = +1;

  friend bool operator==(const TLetter&, const TLetter&) = default;
};

/* One word of a rule body, with its sign. */
struct TSummand {
  int sign = +1;
  std::vector<TLetter> word;

  friend bool operator==(const TSummand&, const TSummand&) = default;
};

/*
 * Rule body q^(a*j+b) * c0 * (sum of signed words), c0 free of q^j.
 * Instantiating at j substitutes the letter indexes and the power of q.
 */
struct Rule {
  long a = 0;
  long b = 0;
  QPoly c0 = QPoly(1);
  std::vector<TSummand> words;

  Expr instantiate(long j) const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Grammar {
  std::string name;
  std::vector<MasterId> masters;  // declaration order is the priority
  std::map<MasterId, Rule> rules;
  Order order = Order::KSO;

  int priority(MasterId m) const;  // UnknownMaster if undeclared

  friend bool operator==(const Grammar&, const Grammar&) = default;
};

struct DeriveStats {
  /* Set when re-reducing after a reorder shortened some word. */
  bool reorder_cancellation = false;
};

/* Stable-sort every word by the order key, then re-reduce. */
Expr apply_order(const Grammar& g, const Expr& a, DeriveStats* stats = nullptr);

/*
 * Body of the rule for one letter.  A plain letter m[i] yields the rule
 * instantiated at i; an inverse yields -m[i]^-1 * body(m[i]) * m[i+1]^-1.
 */
Expr rule_apply(const Grammar& g, const Letter& s);

/*
 * One derivative step: each word maps to the ordered sum over its positions
 * of prefix * body(letter) * shifted suffix, coefficients pass through.
 * The serial and parallel forms agree exactly; derive picks one by size.
 */
Expr derive_serial(const Grammar& g, const Expr& a, DeriveStats* stats = nullptr);
Expr derive_parallel(const Grammar& g, const Expr& a, DeriveStats* stats = nullptr);
Expr derive(const Grammar& g, const Expr& a, DeriveStats* stats = nullptr);
Expr derive_n(const Grammar& g, const Expr& a, int n, DeriveStats* stats = nullptr);

/* Keep-as-written order, coefficient exponent a == 1, all indexes relative. */
bool is_q_linear(const Grammar& g);

/* Every rule body at j+1 equals q times the shifted body at j. */
bool satisfies_shift(const Grammar& g);

}  // namespace qgram

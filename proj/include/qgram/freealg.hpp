#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgram/qpoly.hpp"

namespace qgram {

/*
 * Master symbols (the non-commutative alphabet) are interned separately from
 * the commutative variables, so "x" the master and "x" the polynomial
 * variable coexist.  Not thread safe; interning happens during setup only.
 */
using MasterId = int;

MasterId master_intern(const std::string& name);
const std::string& master_name(MasterId id);

/* One indexed letter m[i] or its formal inverse m[i]^-1. */
struct Letter {
  MasterId master = 0;
  int index = 0;
  std::int8_t sign = +1;

  Letter inverse() const { return {master, index, static_cast<std::int8_t>(-sign)}; }
  Letter shifted(int k) const { return {master, index + k, sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/* Canonical letter key: master name, then index, then plain before inverse. */
bool letter_less(const Letter& a, const Letter& b);

/* Cancel adjacent inverse pairs until none remain.  One left-to-right stack
   pass reaches the unique normal form. */
std::vector<Letter> reduce(std::vector<Letter> ls);

/*
 * Reduced word in the free group on the indexed letters.  The empty word is
 * the group identity.  Every constructor reduces, so equality is structural.
 */
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> ls) : ls_(reduce(std::move(ls))) {}

  static Word letter(MasterId m, int index, int sign = +1);

  const std::vector<Letter>& letters() const { return ls_; }
  std::size_t size() const { return ls_.size(); }
  bool empty() const { return ls_.empty(); }

  Word inverse() const;
  Word shifted(int k) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> ls_;
};

/* Canonical word key: shorter first, then letterwise letter_less. */
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

/*
 * Group algebra element: finite sum of reduced words with Laurent polynomial
 * coefficients.  Invariant: no zero coefficient is stored, so zero is the
 * empty map and iteration follows the canonical word order.
 */
class Expr {
 public:
  using Terms = std::map<Word, QPoly, WordLess>;

  Expr() = default;
  explicit Expr(const Word& w, const QPoly& c = QPoly(1)) { add_term(w, c); }

  static Expr one() { return Expr(Word()); }

  bool is_zero() const { return ts_.empty(); }
  std::size_t term_count() const { return ts_.size(); }
  const Terms& terms() const { return ts_; }
  QPoly coeff(const Word& w) const;

  Expr& add_term(const Word& w, const QPoly& c);

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  Terms ts_;
};

Expr expr_add(const Expr& a, const Expr& b);
Expr expr_mul(const Expr& a, const Expr& b);
Expr expr_scale(const QPoly& c, const Expr& a);
Expr expr_neg(const Expr& a);

/* Raise every letter index by k >= 0. */
Expr up_arrow(const Expr& a, int k);

/* Number of words with nonzero coefficient. */
std::size_t omega(const Expr& a);

}  // namespace qgram

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgram/error.hpp"

namespace qgram {

using Int = mpz_class;

/*
 * Commutative variables are interned to dense ids.  The default alphabet
 * q, x, y, z, e, beta, t is registered up front, in that order; later
 * registrations append.  Id order doubles as the display rank, so the
 * canonical text and JSON forms are stable for any fixed input.
 * Interning is not thread safe; it happens during setup and parsing only.
 */
using VarId = int;

VarId var_intern(const std::string& name);
const std::string& var_name(VarId id);
VarId q_id();

/*
 * Laurent monomial over the commutative alphabet.  Invariant: factors are
 * sorted by VarId and hold no zero exponent, so equality is structural.
 */
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(VarId id, long exp = 1);
  static Monomial var(const std::string& name, long exp = 1);

  bool is_unit() const { return fs_.empty(); }
  long exponent(VarId id) const;
  long degree() const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) {
    a *= b;
    return a;
  }
  Monomial pow(long k) const;
  Monomial inverse() const { return pow(-1); }

  const std::vector<std::pair<VarId, long>>& factors() const { return fs_; }
  void set(VarId id, long exp);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, long>> fs_;
};

/*
 * Graded display order: lower total degree first, ties broken by the earliest
 * ranked variable carrying the larger exponent.  1 < q < x < q^2 < q*x < x^2.
 */
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/*
 * Exact Laurent polynomial with bigint coefficients.  Invariant: the term map
 * never stores a zero coefficient, so zero is the empty map and equality is
 * structural.  Iteration order is the display order.
 */
class QPoly {
 public:
  using Terms = std::map<Monomial, Int, MonomialLess>;

  QPoly() = default;
  QPoly(long c) { add_term(Monomial(), Int(c)); }
  QPoly(const Int& c) { add_term(Monomial(), c); }

  static QPoly var(const std::string& name, long exp = 1);
  static QPoly term(const Int& c, const Monomial& m);

  bool is_zero() const { return ts_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return ts_.size() == 1; }
  bool is_unit_monomial() const;
  size_t size() const { return ts_.size(); }
  const Terms& terms() const { return ts_; }
  Int coeff(const Monomial& m) const;

  QPoly& add_term(const Monomial& m, const Int& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  Terms ts_;
};

/* q^k as a polynomial, k may be negative. */
QPoly q_power(long k);

/* p^k.  k < 0 requires a one-term p with coefficient +1 or -1. */
QPoly pow(const QPoly& p, long k);

/* Inverse of a one-term polynomial with coefficient +1 or -1. */
QPoly invert_monomial(const QPoly& p);

/*
 * Replace v by image.  Negative exponents of v require an invertible image,
 * i.e. a one-term polynomial with unit coefficient.
 */
QPoly substitute(const QPoly& p, VarId v, const QPoly& image);

}  // namespace qgram

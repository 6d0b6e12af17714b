#pragma once

#include <map>

#include "qgram/freealg.hpp"
#include "qgram/qpoly.hpp"

namespace qgram {

/*
 * Image of one master family: sign * mono * q^(qj * index).  The image of
 * m[i]^-1 is the reciprocal monomial with the same sign.
 */
struct EvalImage {
  int sign = +1;
  Monomial mono;
  long qj = 0;

  friend bool operator==(const EvalImage&, const EvalImage&) = default;
};

/*
 * Ring map from the group algebra to the commutative Laurent ring.  It is a
 * homomorphism on words, so the value of an expression never depends on the
 * rewriting order used to normalize it.
 */
class EvalMap {
 public:
  void set(MasterId m, EvalImage img) { images_[m] = img; }
  bool has(MasterId m) const { return images_.count(m) != 0; }
  const EvalImage& image(MasterId m) const;  // UnknownMaster
  bool empty() const { return images_.empty(); }
  const std::map<MasterId, EvalImage>& images() const { return images_; }

  QPoly letter_value(const Letter& l) const;
  QPoly word_value(const Word& w) const;
  QPoly operator()(const Expr& a) const;

  /* True when no image carries an index-dependent power of q. */
  bool is_master_linear() const;

  friend bool operator==(const EvalMap&, const EvalMap&) = default;

 private:
  std::map<MasterId, EvalImage> images_;
};

QPoly evaluate(const EvalMap& phi, const Expr& a);

}  // namespace qgram

#include "qgram/evalmap.hpp"

namespace qgram {

const EvalImage& EvalMap::image(MasterId m) const {
  auto it = images_.find(m);
  if (it == images_.end())
    fail(Err::UnknownMaster, "no evaluation image for master " + master_name(m));
  return it->second;
}

QPoly EvalMap::letter_value(const Letter& l) const {
  const EvalImage& img = image(l.master);
  Monomial m = img.mono;
  if (img.qj != 0) m *= Monomial::var(q_id(), img.qj * l.index);
  if (l.sign < 0) m = m.inverse();
  return QPoly::term(Int(img.sign), m);
}

QPoly EvalMap::word_value(const Word& w) const {
  QPoly out(1);
  for (const Letter& l : w.letters()) out *= letter_value(l);
  return out;
}

QPoly EvalMap::operator()(const Expr& a) const {
  QPoly out;
  for (const auto& [w, c] : a.terms()) out += c * word_value(w);
  return out;
}

bool EvalMap::is_master_linear() const {
  for (const auto& [m, img] : images_)
    if (img.qj != 0) return false;
  return true;
}

QPoly evaluate(const EvalMap& phi, const Expr& a) { return phi(a); }

}  // namespace qgram

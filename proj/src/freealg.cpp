#include "qgram/freealg.hpp"

#include <algorithm>

namespace qgram {

namespace {

struct MasterTable {
  std::vector<std::string> names;
  std::map<std::string, MasterId> ids;

  MasterId add(const std::string& n) {
    auto it = ids.find(n);
    if (it != ids.end()) return it->second;
    names.push_back(n);
    MasterId id = static_cast<MasterId>(names.size() - 1);
    ids.emplace(n, id);
    return id;
  }
};

MasterTable& table() {
  static MasterTable t;
  return t;
}

}  // namespace

MasterId master_intern(const std::string& name) { return table().add(name); }

const std::string& master_name(MasterId id) { return table().names.at(id); }

bool letter_less(const Letter& a, const Letter& b) {
  if (a.master != b.master) return master_name(a.master) < master_name(b.master);
  if (a.index != b.index) return a.index < b.index;
  return a.sign > b.sign;
}

std::vector<Letter> reduce(std::vector<Letter> ls) {
  std::vector<Letter> out;
  out.reserve(ls.size());
  for (const Letter& l : ls) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word Word::letter(MasterId m, int index, int sign) {
  Word w;
  w.ls_.push_back({m, index, static_cast<std::int8_t>(sign)});
  return w;
}

Word Word::inverse() const {
  Word w;
  w.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
    w.ls_.push_back(it->inverse());
  return w;
}

Word Word::shifted(int k) const {
  Word w;
  w.ls_.reserve(ls_.size());
  for (const Letter& l : ls_) w.ls_.push_back(l.shifted(k));
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> ls;
  ls.reserve(a.ls_.size() + b.ls_.size());
  ls.insert(ls.end(), a.ls_.begin(), a.ls_.end());
  ls.insert(ls.end(), b.ls_.begin(), b.ls_.end());
  Word w;
  w.ls_ = reduce(std::move(ls));
  return w;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& la = a.letters();
  const auto& lb = b.letters();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] != lb[i]) return letter_less(la[i], lb[i]);
  }
  return false;
}

QPoly Expr::coeff(const Word& w) const {
  auto it = ts_.find(w);
  return it == ts_.end() ? QPoly() : it->second;
}

Expr& Expr::add_term(const Word& w, const QPoly& c) {
  if (c.is_zero()) return *this;
  auto [it, fresh] = ts_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) ts_.erase(it);
  }
  return *this;
}

Expr expr_add(const Expr& a, const Expr& b) {
  Expr out = a;
  for (const auto& [w, c] : b.terms()) out.add_term(w, c);
  return out;
}

Expr expr_mul(const Expr& a, const Expr& b) {
  Expr out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa * wb, ca * cb);
  return out;
}

Expr expr_scale(const QPoly& c, const Expr& a) {
  Expr out;
  for (const auto& [w, cw] : a.terms()) out.add_term(w, c * cw);
  return out;
}

Expr expr_neg(const Expr& a) {
  Expr out;
  for (const auto& [w, c] : a.terms()) out.add_term(w, -c);
  return out;
}

Expr up_arrow(const Expr& a, int k) {
  Expr out;
  for (const auto& [w, c] : a.terms()) out.add_term(w.shifted(k), c);
  return out;
}

std::size_t omega(const Expr& a) { return a.term_count(); }

}  // namespace qgram

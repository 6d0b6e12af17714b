#include "qgram/qpoly.hpp"

#include <algorithm>
#include <limits>

namespace qgram {

namespace {

struct VarTable {
  std::vector<std::string> names;
  std::map<std::string, VarId> ids;

  VarTable() {
    for (const char* n : {"q", "x", "y", "z", "e", "beta", "t"}) add(n);
  }

  VarId add(const std::string& n) {
    auto it = ids.find(n);
    if (it != ids.end()) return it->second;
    names.push_back(n);
    VarId id = static_cast<VarId>(names.size() - 1);
    ids.emplace(n, id);
    return id;
  }
};

VarTable& table() {
  static VarTable t;
  return t;
}

}  // namespace

VarId var_intern(const std::string& name) { return table().add(name); }

const std::string& var_name(VarId id) { return table().names.at(id); }

VarId q_id() {
  static const VarId q = var_intern("q");
  return q;
}

Monomial Monomial::var(VarId id, long exp) {
  Monomial m;
  m.set(id, exp);
  return m;
}

Monomial Monomial::var(const std::string& name, long exp) {
  return var(var_intern(name), exp);
}

long Monomial::exponent(VarId id) const {
  auto it = std::lower_bound(
      fs_.begin(), fs_.end(), id,
      [](const std::pair<VarId, long>& f, VarId v) { return f.first < v; });
  return (it != fs_.end() && it->first == id) ? it->second : 0;
}

long Monomial::degree() const {
  long d = 0;
  for (const auto& [v, e] : fs_) d += e;
  return d;
}

void Monomial::set(VarId id, long exp) {
  auto it = std::lower_bound(
      fs_.begin(), fs_.end(), id,
      [](const std::pair<VarId, long>& f, VarId v) { return f.first < v; });
  if (it != fs_.end() && it->first == id) {
    if (exp == 0) {
      fs_.erase(it);
    } else {
      it->second = exp;
    }
  } else if (exp != 0) {
    fs_.insert(it, {id, exp});
  }
}

Monomial& Monomial::operator*=(const Monomial& o) {
  std::vector<std::pair<VarId, long>> out;
  out.reserve(fs_.size() + o.fs_.size());
  size_t i = 0, j = 0;
  while (i < fs_.size() || j < o.fs_.size()) {
    VarId va = i < fs_.size() ? fs_[i].first : std::numeric_limits<VarId>::max();
    VarId vb =
        j < o.fs_.size() ? o.fs_[j].first : std::numeric_limits<VarId>::max();
    VarId v = std::min(va, vb);
    long e = 0;
    if (va == v) e += fs_[i++].second;
    if (vb == v) e += o.fs_[j++].second;
    if (e != 0) out.emplace_back(v, e);
  }
  fs_ = std::move(out);
  return *this;
}

Monomial Monomial::pow(long k) const {
  Monomial m;
  if (k == 0) return m;
  m.fs_ = fs_;
  for (auto& [v, e] : m.fs_) e *= k;
  return m;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    VarId va = i < fa.size() ? fa[i].first : std::numeric_limits<VarId>::max();
    VarId vb = j < fb.size() ? fb[j].first : std::numeric_limits<VarId>::max();
    VarId v = std::min(va, vb);
    long ea = va == v ? fa[i++].second : 0;
    long eb = vb == v ? fb[j++].second : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

QPoly QPoly::var(const std::string& name, long exp) {
  return term(Int(1), Monomial::var(name, exp));
}

QPoly QPoly::term(const Int& c, const Monomial& m) {
  QPoly p;
  p.add_term(m, c);
  return p;
}

bool QPoly::is_one() const {
  return ts_.size() == 1 && ts_.begin()->first.is_unit() &&
         ts_.begin()->second == 1;
}

bool QPoly::is_unit_monomial() const {
  if (ts_.size() != 1) return false;
  const Int& c = ts_.begin()->second;
  return c == 1 || c == -1;
}

Int QPoly::coeff(const Monomial& m) const {
  auto it = ts_.find(m);
  return it == ts_.end() ? Int(0) : it->second;
}

QPoly& QPoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return *this;
  auto [it, fresh] = ts_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) ts_.erase(it);
  }
  return *this;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [m, c] : o.ts_) add_term(m, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [m, c] : o.ts_) add_term(m, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  return out;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out;
  for (const auto& [m, c] : ts_) out.add_term(m, -c);
  return out;
}

QPoly q_power(long k) { return QPoly::term(Int(1), Monomial::var(q_id(), k)); }

QPoly pow(const QPoly& p, long k) {
  if (k < 0) {
    if (!p.is_unit_monomial())
      fail(Err::NegativePowerOfNonMonomial,
           "negative power needs a one-term polynomial with unit coefficient");
    const auto& [m, c] = *p.terms().begin();
    Int cc = (c == -1 && (k % 2 != 0)) ? Int(-1) : Int(1);
    return QPoly::term(cc, m.pow(k));
  }
  QPoly out(1);
  QPoly base = p;
  long e = k;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

QPoly invert_monomial(const QPoly& p) {
  if (!p.is_unit_monomial())
    fail(Err::NotInvertible,
         "inverse needs a one-term polynomial with unit coefficient");
  return pow(p, -1);
}

QPoly substitute(const QPoly& p, VarId v, const QPoly& image) {
  QPoly out;
  for (const auto& [m, c] : p.terms()) {
    long e = m.exponent(v);
    Monomial rest = m;
    rest.set(v, 0);
    QPoly t = QPoly::term(c, rest);
    if (e != 0) t = t * pow(image, e);
    out += t;
  }
  return out;
}

}  // namespace qgram

#include "qgram/jsonio.hpp"

#include <utility>
#include <vector>

#include "json.hpp"

namespace qgram {

namespace {

using nlohmann::json;

/* ----- writers ----- */

json jexponents(const Monomial& m) {
  json out = json::object();
  for (const auto& [v, e] : m.factors()) out[var_name(v)] = e;
  return out;
}

json jqpoly(const QPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t = json::object();
    t["coeff"] = c.get_str();
    t["exponents"] = jexponents(m);
    out.push_back(std::move(t));
  }
  return out;
}

json jword(const Word& w) {
  json out = json::array();
  for (const Letter& l : w.letters()) {
    json t = json::object();
    t["index"] = l.index;
    t["master"] = master_name(l.master);
    t["sign"] = static_cast<int>(l.sign);
    out.push_back(std::move(t));
  }
  return out;
}

json jexpr(const Expr& a) {
  json terms = json::array();
  for (const auto& [w, c] : a.terms()) {
    json t = json::object();
    t["coeff"] = jqpoly(c);
    t["word"] = jword(w);
    terms.push_back(std::move(t));
  }
  json out = json::object();
  out["terms"] = std::move(terms);
  return out;
}

json jeseries(const ESeries& f) {
  json coeffs = json::array();
  for (int n = 0; n <= f.order(); ++n) coeffs.push_back(jqpoly(f[n]));
  json out = json::object();
  out["coeffs"] = std::move(coeffs);
  out["order"] = f.order();
  return out;
}

json jgrammar(const Grammar& g, const EvalMap* eval, const Expr* seed) {
  json out = json::object();
  json masters = json::array();
  for (MasterId m : g.masters) masters.push_back(master_name(m));
  out["masters"] = std::move(masters);
  out["name"] = g.name;
  out["order"] = order_name(g.order);
  json rules = json::array();
  for (MasterId m : g.masters) {
    auto it = g.rules.find(m);
    if (it == g.rules.end()) continue;
    const Rule& r = it->second;
    json jr = json::object();
    jr["a"] = r.a;
    jr["b"] = r.b;
    jr["c0"] = jqpoly(r.c0);
    jr["master"] = master_name(m);
    json words = json::array();
    for (const TSummand& s : r.words) {
      json js = json::object();
      js["sign"] = s.sign;
      json letters = json::array();
      for (const TLetter& l : s.word) {
        json jl = json::object();
        json idx = json::object();
        idx["offset"] = l.index.offset;
        idx["relative"] = l.index.relative;
        jl["index"] = std::move(idx);
        jl["master"] = master_name(l.master);
        jl["sign"] = static_cast<int>(l.sign);
        letters.push_back(std::move(jl));
      }
      js["letters"] = std::move(letters);
      words.push_back(std::move(js));
    }
    jr["words"] = std::move(words);
    rules.push_back(std::move(jr));
  }
  out["rules"] = std::move(rules);
  if (eval != nullptr) {
    json ev = json::array();
    for (MasterId m : g.masters) {
      if (!eval->has(m)) continue;
      const EvalImage& img = eval->image(m);
      json je = json::object();
      je["master"] = master_name(m);
      je["mono"] = jexponents(img.mono);
      je["qj"] = img.qj;
      je["sign"] = img.sign;
      ev.push_back(std::move(je));
    }
    out["eval"] = std::move(ev);
  }
  if (seed != nullptr) out["seed"] = jexpr(*seed);
  return out;
}

/* ----- readers ----- */

[[noreturn]] void bad(const std::string& msg) { fail(Err::SchemaError, msg); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing member ") + key);
  return *it;
}

long as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::string as_str(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

Monomial monomial_from(const json& j) {
  if (!j.is_object()) bad("exponents must be an object");
  Monomial m;
  for (auto it = j.begin(); it != j.end(); ++it)
    m.set(var_intern(it.key()), as_int(it.value(), "exponent"));
  return m;
}

Int coeff_from(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (!j.is_string()) bad("coeff must be a decimal string");
  try {
    return Int(j.get<std::string>());
  } catch (const std::exception&) {
    bad("coeff is not a decimal integer");
  }
}

QPoly qpoly_from(const json& j) {
  QPoly p;
  for (const json& t : as_array(j, "polynomial"))
    p.add_term(monomial_from(member(t, "exponents")),
               coeff_from(member(t, "coeff")));
  return p;
}

std::int8_t sign_from(const json& j) {
  long s = as_int(j, "sign");
  if (s != 1 && s != -1) bad("sign must be 1 or -1");
  return static_cast<std::int8_t>(s);
}

Word word_from(const json& j) {
  std::vector<Letter> ls;
  for (const json& t : as_array(j, "word")) {
    Letter l;
    l.master = master_intern(as_str(member(t, "master"), "master"));
    l.index = static_cast<int>(as_int(member(t, "index"), "index"));
    l.sign = sign_from(member(t, "sign"));
    ls.push_back(l);
  }
  return Word(std::move(ls));
}

Expr expr_from(const json& j) {
  Expr a;
  for (const json& t : as_array(member(j, "terms"), "terms"))
    a.add_term(word_from(member(t, "word")), qpoly_from(member(t, "coeff")));
  return a;
}

ESeries eseries_from(const json& j) {
  const json& coeffs = as_array(member(j, "coeffs"), "coeffs");
  long order = as_int(member(j, "order"), "order");
  if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
    bad("order does not match the coefficient count");
  std::vector<QPoly> cs;
  for (const json& c : coeffs) cs.push_back(qpoly_from(c));
  return ESeries(std::move(cs));
}

ParsedGrammar grammar_from(const json& j) {
  ParsedGrammar out;
  Grammar& g = out.grammar;
  g.name = as_str(member(j, "name"), "name");
  auto ord = order_from_name(as_str(member(j, "order"), "order"));
  if (!ord) bad("unknown order name");
  g.order = *ord;
  for (const json& m : as_array(member(j, "masters"), "masters"))
    g.masters.push_back(master_intern(as_str(m, "master name")));
  auto is_master = [&](MasterId id) {
    for (MasterId m : g.masters)
      if (m == id) return true;
    return false;
  };
  for (const json& jr : as_array(member(j, "rules"), "rules")) {
    MasterId m = master_intern(as_str(member(jr, "master"), "rule master"));
    if (!is_master(m)) bad("rule for an undeclared master");
    Rule r;
    r.a = as_int(member(jr, "a"), "a");
    r.b = as_int(member(jr, "b"), "b");
    r.c0 = qpoly_from(member(jr, "c0"));
    r.words.clear();
    for (const json& js : as_array(member(jr, "words"), "words")) {
      TSummand s;
      s.sign = static_cast<int>(sign_from(member(js, "sign")));
      for (const json& jl : as_array(member(js, "letters"), "letters")) {
        TLetter l;
        l.master = master_intern(as_str(member(jl, "master"), "master"));
        if (!is_master(l.master)) bad("letter with an undeclared master");
        const json& idx = member(jl, "index");
        l.index.offset = as_int(member(idx, "offset"), "offset");
        const json& rel = member(idx, "relative");
        if (!rel.is_boolean()) bad("relative must be a boolean");
        l.index.relative = rel.get<bool>();
        l.sign = sign_from(member(jl, "sign"));
        s.word.push_back(std::move(l));
      }
      r.words.push_back(std::move(s));
    }
    if (!g.rules.emplace(m, std::move(r)).second)
      bad("two rules for one master");
  }
  for (MasterId m : g.masters)
    if (g.rules.find(m) == g.rules.end()) bad("master without a rule");
  if (j.contains("eval")) {
    EvalMap ev;
    for (const json& je : as_array(j.at("eval"), "eval")) {
      MasterId m = master_intern(as_str(member(je, "master"), "eval master"));
      if (!is_master(m)) bad("eval for an undeclared master");
      EvalImage img;
      img.mono = monomial_from(member(je, "mono"));
      img.qj = as_int(member(je, "qj"), "qj");
      img.sign = static_cast<int>(sign_from(member(je, "sign")));
      ev.set(m, img);
    }
    out.eval = std::move(ev);
  }
  if (j.contains("seed")) out.seed = expr_from(j.at("seed"));
  return out;
}

std::string dump(const json& j) { return j.dump(); }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    bad(e.what());
  }
}

template <typename F>
auto guarded(const std::string& text, F f) {
  json j = parse(text);
  try {
    return f(j);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    bad(e.what());
  }
}

}  // namespace

std::string to_json(const QPoly& p) { return dump(jqpoly(p)); }
std::string to_json(const Word& w) { return dump(jword(w)); }
std::string to_json(const Expr& a) { return dump(jexpr(a)); }
std::string to_json(const ESeries& f) { return dump(jeseries(f)); }
std::string to_json(const Grammar& g, const EvalMap* eval, const Expr* seed) {
  return dump(jgrammar(g, eval, seed));
}

QPoly qpoly_from_json(const std::string& text) {
  return guarded(text, [](const json& j) { return qpoly_from(j); });
}

Word word_from_json(const std::string& text) {
  return guarded(text, [](const json& j) { return word_from(j); });
}

Expr expr_from_json(const std::string& text) {
  return guarded(text, [](const json& j) { return expr_from(j); });
}

ESeries eseries_from_json(const std::string& text) {
  return guarded(text, [](const json& j) { return eseries_from(j); });
}

ParsedGrammar grammar_from_json(const std::string& text) {
  return guarded(text, [](const json& j) { return grammar_from(j); });
}

}  // namespace qgram

#include "qgram/textio.hpp"

#include <cctype>
#include <cstdlib>
#include <set>
#include <utility>
#include <vector>

namespace qgram {

namespace {

enum class Tok {
  End,
  Int,
  Ident,
  Plus,
  Minus,
  Star,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Arrow,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

bool ident_start(unsigned char c) {
  return std::isalpha(c) != 0 || c == '_' || c >= 0x80;
}

bool ident_part(unsigned char c) {
  return ident_start(c) || std::isdigit(c) != 0 || c == '\'';
}

/* Copyable one-token-lookahead lexer; copies snapshot the position. */
class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(&src) { next(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

  [[noreturn]] void err(const std::string& msg, const Token& at) const {
    fail(Err::SyntaxError, std::to_string(at.line) + ":" +
                               std::to_string(at.col) + ": " + msg);
  }

  [[noreturn]] void err_here(const std::string& msg) const { err(msg, tok_); }

  Token expect(Tok kind, const std::string& what) {
    if (tok_.kind != kind) err_here("expected " + what);
    return take();
  }

 private:
  void next() {
    const std::string& s = *src_;
    while (pos_ < s.size()) {
      char c = s[pos_];
      if (c == '#') {
        while (pos_ < s.size() && s[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    tok_.line = line_;
    tok_.col = col_;
    tok_.text.clear();
    if (pos_ >= s.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = s[pos_];
    auto one = [&](Tok k) {
      tok_.kind = k;
      tok_.text = c;
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '+': one(Tok::Plus); return;
      case '*': one(Tok::Star); return;
      case '^': one(Tok::Caret); return;
      case '(': one(Tok::LParen); return;
      case ')': one(Tok::RParen); return;
      case '[': one(Tok::LBracket); return;
      case ']': one(Tok::RBracket); return;
      case ';': one(Tok::Semi); return;
      case ',': one(Tok::Comma); return;
      case '-':
        if (pos_ + 1 < s.size() && s[pos_ + 1] == '>') {
          tok_.kind = Tok::Arrow;
          tok_.text = "->";
          pos_ += 2;
          col_ += 2;
        } else {
          one(Tok::Minus);
        }
        return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      tok_.kind = Tok::Int;
      while (pos_ < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos_])) != 0) {
        tok_.text += s[pos_++];
        ++col_;
      }
      return;
    }
    if (ident_start(static_cast<unsigned char>(c))) {
      tok_.kind = Tok::Ident;
      while (pos_ < s.size() && ident_part(static_cast<unsigned char>(s[pos_]))) {
        tok_.text += s[pos_++];
        ++col_;
      }
      return;
    }
    fail(Err::SyntaxError, std::to_string(line_) + ":" + std::to_string(col_) +
                               ": unexpected character '" + std::string(1, c) +
                               "'");
  }

  const std::string* src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

long to_long(Lexer& lx, const Token& t) {
  try {
    return std::stol(t.text);
  } catch (const std::exception&) {
    lx.err("integer out of range", t);
  }
}

/* Signed integer after ^, e.g. ^3 or ^-1. */
long signed_exponent(Lexer& lx) {
  long sgn = 1;
  if (lx.peek().kind == Tok::Minus) {
    lx.take();
    sgn = -1;
  }
  Token t = lx.expect(Tok::Int, "an integer exponent");
  return sgn * to_long(lx, t);
}

Expr expr_power(const Expr& base, long k) {
  if (k >= 0) {
    Expr out = Expr::one();
    for (long i = 0; i < k; ++i) out = expr_mul(out, base);
    return out;
  }
  if (base.term_count() != 1)
    fail(Err::SemanticError, "cannot raise a sum to a negative power");
  const auto& [w, c] = *base.terms().begin();
  if (!c.is_unit_monomial())
    fail(Err::SemanticError,
         "negative power needs a unit monomial coefficient");
  Expr inv(w.inverse(), invert_monomial(c));
  Expr out = Expr::one();
  for (long i = 0; i < -k; ++i) out = expr_mul(out, inv);
  return out;
}

/*
 * Shared recursive-descent parser for expressions.  A factor is an integer,
 * a commutative variable, a letter m[i], or a parenthesized sum; ^ takes an
 * integer exponent and negative exponents need an invertible base.
 */
class ExprParser {
 public:
  explicit ExprParser(Lexer& lx) : lx_(lx) {}

  Expr sum() {
    bool neg = false;
    if (lx_.peek().kind == Tok::Plus) {
      lx_.take();
    } else if (lx_.peek().kind == Tok::Minus) {
      lx_.take();
      neg = true;
    }
    Expr acc = term();
    if (neg) acc = expr_neg(acc);
    while (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
      bool minus = lx_.take().kind == Tok::Minus;
      Expr t = term();
      acc = expr_add(acc, minus ? expr_neg(t) : t);
    }
    return acc;
  }

 private:
  Expr term() {
    Expr acc = factor();
    while (lx_.peek().kind == Tok::Star) {
      lx_.take();
      acc = expr_mul(acc, factor());
    }
    return acc;
  }

  Expr factor() {
    Token t = lx_.peek();
    Expr base;
    if (t.kind == Tok::Int) {
      lx_.take();
      base = Expr(Word(), QPoly(Int(t.text)));
    } else if (t.kind == Tok::Ident) {
      lx_.take();
      if (lx_.peek().kind == Tok::LBracket) {
        lx_.take();
        Token idx = lx_.expect(Tok::Int, "a letter index");
        lx_.expect(Tok::RBracket, "]");
        base = Expr(Word::letter(master_intern(t.text),
                                 static_cast<int>(to_long(lx_, idx))));
      } else {
        base = Expr(Word(), QPoly::var(t.text));
      }
    } else if (t.kind == Tok::LParen) {
      lx_.take();
      base = sum();
      lx_.expect(Tok::RParen, ")");
    } else {
      lx_.err_here("expected a factor");
    }
    if (lx_.peek().kind == Tok::Caret) {
      lx_.take();
      base = expr_power(base, signed_exponent(lx_));
    }
    return base;
  }

  Lexer& lx_;
};

QPoly expr_to_qpoly(const Expr& e, const char* what) {
  if (e.is_zero()) return QPoly();
  if (e.term_count() == 1 && e.terms().begin()->first.empty())
    return e.terms().begin()->second;
  fail(Err::SemanticError, std::string(what) + " must be a commutative polynomial");
}

}  // namespace

Expr parse_expr(const std::string& text) {
  Lexer lx(text);
  ExprParser p(lx);
  Expr e = p.sum();
  if (lx.peek().kind != Tok::End) lx.err_here("unexpected trailing input");
  return e;
}

QPoly parse_qpoly(const std::string& text) {
  return expr_to_qpoly(parse_expr(text), "input");
}

/* ------------------------------------------------------------------ */
/* Printers                                                            */
/* ------------------------------------------------------------------ */

namespace {

std::string monomial_body(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string to_text(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    first = false;
    Int mag = neg ? Int(-c) : c;
    if (m.is_unit()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += monomial_body(m);
    }
  }
  return out;
}

std::string to_text(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += "*";
    out += master_name(l.master) + "[" + std::to_string(l.index) + "]";
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string to_text(const Expr& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : a.terms()) {
    bool all_neg = true;
    for (const auto& [m, coef] : c.terms())
      if (coef > 0) all_neg = false;
    QPoly body = all_neg ? -c : c;
    if (first) {
      if (all_neg) out += "-";
    } else {
      out += all_neg ? " - " : " + ";
    }
    first = false;
    std::string coeff_txt;
    if (!body.is_one()) {
      coeff_txt =
          body.is_monomial() ? to_text(body) : "(" + to_text(body) + ")";
    }
    if (w.empty()) {
      out += coeff_txt.empty() ? "1" : coeff_txt;
    } else if (coeff_txt.empty()) {
      out += to_text(w);
    } else {
      out += coeff_txt + "*" + to_text(w);
    }
  }
  return out;
}

std::string to_text(const ESeries& f) {
  std::string out;
  for (int n = 0; n <= f.order(); ++n) {
    if (n > 0) out += "\n";
    out += "a[" + std::to_string(n) + "] = " + to_text(f[n]);
  }
  return out;
}

/* ------------------------------------------------------------------ */
/* Grammar DSL                                                         */
/* ------------------------------------------------------------------ */

namespace {

class DslParser {
 public:
  explicit DslParser(const std::string& text) : lx_(text) {}

  ParsedGrammar run() {
    for (;;) {
      Token t = lx_.peek();
      if (t.kind == Tok::End) break;
      if (t.kind != Tok::Ident) lx_.err_here("expected a clause keyword");
      if (t.text == "grammar") {
        lx_.take();
        g_.name = lx_.expect(Tok::Ident, "a grammar name").text;
        semi();
      } else if (t.text == "masters") {
        parse_masters();
      } else if (t.text == "order") {
        lx_.take();
        Token o = lx_.expect(Tok::Ident, "an order name");
        auto ord = order_from_name(o.text);
        if (!ord) fail(Err::SemanticError, "unknown order " + o.text);
        g_.order = *ord;
        semi();
      } else if (t.text == "rule") {
        parse_rule();
      } else if (t.text == "eval") {
        parse_eval();
      } else if (t.text == "seed") {
        lx_.take();
        need_masters();
        ExprParser ep(lx_);
        Expr e = ep.sum();
        semi();
        check_masters(e, "seed");
        seed_ = e;
      } else {
        lx_.err_here("unknown clause " + t.text);
      }
    }
    if (g_.masters.empty()) fail(Err::SemanticError, "no masters declared");
    for (MasterId m : g_.masters)
      if (g_.rules.find(m) == g_.rules.end())
        fail(Err::SemanticError, "master " + master_name(m) + " has no rule");
    return {std::move(g_), std::move(eval_), std::move(seed_)};
  }

 private:
  void semi() { lx_.expect(Tok::Semi, ";"); }

  void need_masters() {
    if (g_.masters.empty())
      fail(Err::SemanticError, "masters must be declared first");
  }

  void parse_masters() {
    lx_.take();
    if (!g_.masters.empty())
      fail(Err::SemanticError, "masters are already declared");
    for (;;) {
      Token n = lx_.expect(Tok::Ident, "a master name");
      MasterId id = master_intern(n.text);
      for (MasterId seen : g_.masters)
        if (seen == id)
          fail(Err::SemanticError, "master " + n.text + " declared twice");
      g_.masters.push_back(id);
      if (lx_.peek().kind == Tok::Comma) {
        lx_.take();
        continue;
      }
      break;
    }
    semi();
  }

  MasterId lhs_master() {
    Token n = lx_.expect(Tok::Ident, "a master name");
    MasterId id = declared(n);
    lx_.expect(Tok::LBracket, "[");
    Token j = lx_.expect(Tok::Ident, "the index j");
    if (j.text != "j") fail(Err::SemanticError, "left side index must be j");
    lx_.expect(Tok::RBracket, "]");
    return id;
  }

  MasterId declared(const Token& n) {
    MasterId id = master_intern(n.text);
    for (MasterId m : g_.masters)
      if (m == id) return id;
    fail(Err::SemanticError, "unknown master " + n.text);
  }

  void check_masters(const Expr& e, const char* what) {
    for (const auto& [w, c] : e.terms())
      for (const Letter& l : w.letters()) {
        bool ok = false;
        for (MasterId m : g_.masters) ok = ok || m == l.master;
        if (!ok)
          fail(Err::SemanticError, std::string(what) + " uses unknown master " +
                                       master_name(l.master));
      }
  }

  /* True when the parenthesized group starting at the current ( holds a
     letter bracket, telling a word group apart from a coefficient. */
  bool group_has_bracket() {
    Lexer probe = lx_;
    probe.take();  // (
    int depth = 1;
    while (depth > 0) {
      Token t = probe.take();
      if (t.kind == Tok::End) lx_.err_here("unbalanced parenthesis");
      if (t.kind == Tok::LParen) ++depth;
      if (t.kind == Tok::RParen) --depth;
      if (t.kind == Tok::LBracket) return true;
    }
    return false;
  }

  /* Exponent forms after q^: INT, -INT, j, (j), (a*j), (a*j+b), (a*j-b). */
  void parse_q_exponent(Rule& r) {
    Token t = lx_.peek();
    if (t.kind == Tok::Minus) {
      lx_.take();
      r.b -= to_long(lx_, lx_.expect(Tok::Int, "an integer"));
      return;
    }
    if (t.kind == Tok::Int) {
      lx_.take();
      r.b += to_long(lx_, t);
      return;
    }
    if (t.kind == Tok::Ident && t.text == "j") {
      lx_.take();
      r.a += 1;
      return;
    }
    if (t.kind == Tok::LParen) {
      lx_.take();
      long sgn = 1;
      if (lx_.peek().kind == Tok::Minus) {
        lx_.take();
        sgn = -1;
      }
      if (lx_.peek().kind == Tok::Int) {
        Token v = lx_.take();
        long val = to_long(lx_, v);
        if (lx_.peek().kind == Tok::Star) {
          lx_.take();
          Token j = lx_.expect(Tok::Ident, "j");
          if (j.text != "j") lx_.err("expected j", j);
          r.a += sgn * val;
          parse_linear_tail(r);
        } else {
          r.b += sgn * val;
        }
      } else {
        Token j = lx_.expect(Tok::Ident, "j");
        if (j.text != "j") lx_.err("expected j", j);
        r.a += sgn;
        parse_linear_tail(r);
      }
      lx_.expect(Tok::RParen, ")");
      return;
    }
    lx_.err_here("expected a q exponent");
  }

  void parse_linear_tail(Rule& r) {
    if (lx_.peek().kind == Tok::Plus) {
      lx_.take();
      r.b += to_long(lx_, lx_.expect(Tok::Int, "an integer"));
    } else if (lx_.peek().kind == Tok::Minus) {
      lx_.take();
      r.b -= to_long(lx_, lx_.expect(Tok::Int, "an integer"));
    }
  }

  IndexExpr parse_index() {
    IndexExpr idx;
    Token t = lx_.peek();
    if (t.kind == Tok::Int) {
      lx_.take();
      idx.relative = false;
      idx.offset = to_long(lx_, t);
    } else if (t.kind == Tok::Ident && t.text == "j") {
      lx_.take();
      idx.relative = true;
      idx.offset = 0;
      if (lx_.peek().kind == Tok::Plus) {
        lx_.take();
        idx.offset = to_long(lx_, lx_.expect(Tok::Int, "an integer"));
      } else if (lx_.peek().kind == Tok::Minus) {
        lx_.take();
        idx.offset = -to_long(lx_, lx_.expect(Tok::Int, "an integer"));
      }
    } else {
      lx_.err_here("letter index must be j, j+c or an integer");
    }
    lx_.expect(Tok::RBracket, "]");
    return idx;
  }

  /* Letter with optional ^k; k copies, negative k flips the sign. */
  void parse_template_letter(const Token& name, std::vector<TLetter>& word) {
    MasterId id = declared(name);
    lx_.take();  // [
    IndexExpr idx = parse_index();
    long count = 1;
    std::int8_t sign = +1;
    if (lx_.peek().kind == Tok::Caret) {
      lx_.take();
      long k = signed_exponent(lx_);
      if (k < 0) {
        sign = -1;
        count = -k;
      } else {
        count = k;
      }
    }
    for (long i = 0; i < count; ++i) word.push_back({id, idx, sign});
  }

  void parse_word_group(Rule& r) {
    lx_.take();  // (
    std::vector<TSummand> sums;
    int sign = +1;
    if (lx_.peek().kind == Tok::Minus) {
      lx_.take();
      sign = -1;
    } else if (lx_.peek().kind == Tok::Plus) {
      lx_.take();
    }
    for (;;) {
      TSummand s;
      s.sign = sign;
      for (;;) {
        Token t = lx_.peek();
        if (t.kind == Tok::Int) {
          if (t.text != "1")
            fail(Err::SemanticError,
                 "word summands are products of letters, or 1");
          lx_.take();
        } else if (t.kind == Tok::Ident) {
          lx_.take();
          if (lx_.peek().kind != Tok::LBracket)
            fail(Err::SemanticError,
                 "letters in a word group need an [index]");
          parse_template_letter(t, s.word);
        } else {
          lx_.err_here("expected a letter or 1");
        }
        if (lx_.peek().kind == Tok::Star) {
          lx_.take();
          continue;
        }
        break;
      }
      sums.push_back(std::move(s));
      if (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus) {
        sign = lx_.take().kind == Tok::Minus ? -1 : +1;
        continue;
      }
      break;
    }
    lx_.expect(Tok::RParen, ")");
    r.words = std::move(sums);
  }

  void mul_c0(Rule& r, const QPoly& c) {
    VarId j = var_intern("j");
    for (const auto& [m, coef] : c.terms())
      if (m.exponent(j) != 0)
        fail(Err::SemanticError,
             "j may appear only in q exponents and letter indexes");
    r.c0 *= c;
  }

  void parse_rule() {
    lx_.take();
    need_masters();
    MasterId m = lhs_master();
    if (g_.rules.find(m) != g_.rules.end())
      fail(Err::SemanticError, "master " + master_name(m) + " has two rules");
    lx_.expect(Tok::Arrow, "->");

    Rule r;
    r.words.clear();
    std::vector<TLetter> inline_word;
    bool have_group = false;
    for (;;) {
      Token t = lx_.peek();
      if (t.kind == Tok::Int) {
        lx_.take();
        QPoly c{Int(t.text)};
        if (lx_.peek().kind == Tok::Caret) {
          lx_.take();
          c = pow(c, signed_exponent(lx_));
        }
        mul_c0(r, c);
      } else if (t.kind == Tok::LParen) {
        if (group_has_bracket()) {
          if (have_group)
            fail(Err::SemanticError, "rule body has two word groups");
          parse_word_group(r);
          have_group = true;
        } else {
          lx_.take();
          ExprParser ep(lx_);
          Expr e = ep.sum();
          lx_.expect(Tok::RParen, ")");
          QPoly c = expr_to_qpoly(e, "rule coefficient");
          if (lx_.peek().kind == Tok::Caret) {
            lx_.take();
            c = pow(c, signed_exponent(lx_));
          }
          mul_c0(r, c);
        }
      } else if (t.kind == Tok::Ident) {
        if (t.text == "q") {
          lx_.take();
          if (lx_.peek().kind == Tok::Caret) {
            lx_.take();
            parse_q_exponent(r);
          } else {
            r.b += 1;
          }
        } else if (t.text == "j") {
          fail(Err::SemanticError,
               "j may appear only in q exponents and letter indexes");
        } else {
          lx_.take();
          if (lx_.peek().kind == Tok::LBracket) {
            parse_template_letter(t, inline_word);
          } else {
            long e = 1;
            if (lx_.peek().kind == Tok::Caret) {
              lx_.take();
              e = signed_exponent(lx_);
            }
            mul_c0(r, QPoly::var(t.text, e));
          }
        }
      } else {
        lx_.err_here("expected a rule factor");
      }
      if (lx_.peek().kind == Tok::Star) {
        lx_.take();
        continue;
      }
      break;
    }
    semi();

    if (have_group && !inline_word.empty())
      fail(Err::SemanticError,
           "rule body mixes inline letters with a word group");
    if (!have_group) r.words = {{+1, std::move(inline_word)}};
    g_.rules.emplace(m, std::move(r));
  }

  void parse_eval() {
    lx_.take();
    need_masters();
    MasterId m = lhs_master();
    lx_.expect(Tok::Arrow, "->");
    EvalImage img;
    if (lx_.peek().kind == Tok::Minus) {
      lx_.take();
      img.sign = -1;
    }
    for (;;) {
      Token t = lx_.peek();
      if (t.kind == Tok::Int) {
        lx_.take();
        if (t.text != "1")
          fail(Err::SemanticError, "eval image coefficient must be 1 or -1");
      } else if (t.kind == Tok::Ident && t.text == "q") {
        lx_.take();
        if (lx_.peek().kind == Tok::Caret) {
          lx_.take();
          parse_eval_q_exponent(img);
        } else {
          img.mono *= Monomial::var(q_id(), 1);
        }
      } else if (t.kind == Tok::Ident) {
        lx_.take();
        long e = 1;
        if (lx_.peek().kind == Tok::Caret) {
          lx_.take();
          e = signed_exponent(lx_);
        }
        img.mono *= Monomial::var(t.text, e);
      } else {
        lx_.err_here("expected an eval factor");
      }
      if (lx_.peek().kind == Tok::Star) {
        lx_.take();
        continue;
      }
      break;
    }
    if (lx_.peek().kind == Tok::Plus || lx_.peek().kind == Tok::Minus)
      fail(Err::SemanticError, "eval image must be a single signed monomial");
    semi();
    if (!eval_) eval_.emplace();
    eval_->set(m, img);
  }

  void parse_eval_q_exponent(EvalImage& img) {
    Token t = lx_.peek();
    if (t.kind == Tok::Minus) {
      lx_.take();
      long v = to_long(lx_, lx_.expect(Tok::Int, "an integer"));
      img.mono *= Monomial::var(q_id(), -v);
      return;
    }
    if (t.kind == Tok::Int) {
      lx_.take();
      img.mono *= Monomial::var(q_id(), to_long(lx_, t));
      return;
    }
    if (t.kind == Tok::Ident && t.text == "j") {
      lx_.take();
      img.qj += 1;
      return;
    }
    if (t.kind == Tok::LParen) {
      lx_.take();
      long coef = 1;
      if (lx_.peek().kind == Tok::Int) {
        coef = to_long(lx_, lx_.take());
        lx_.expect(Tok::Star, "*");
      }
      Token j = lx_.expect(Tok::Ident, "j");
      if (j.text != "j") lx_.err("expected j", j);
      lx_.expect(Tok::RParen, ")");
      img.qj += coef;
      return;
    }
    lx_.err_here("expected a q exponent");
  }

  Lexer lx_;
  Grammar g_;
  std::optional<EvalMap> eval_;
  std::optional<Expr> seed_;
};

std::string index_text(const IndexExpr& idx) {
  if (!idx.relative) return std::to_string(idx.offset);
  if (idx.offset == 0) return "j";
  if (idx.offset > 0) return "j+" + std::to_string(idx.offset);
  return "j-" + std::to_string(-idx.offset);
}

std::string template_word_text(const std::vector<TLetter>& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const TLetter& l : w) {
    if (!out.empty()) out += "*";
    out += master_name(l.master) + "[" + index_text(l.index) + "]";
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

std::string q_power_text(long a, long b) {
  if (a == 0) return "q^" + std::to_string(b);
  std::string inner = a == 1 ? "j" : std::to_string(a) + "*j";
  if (b > 0) inner += "+" + std::to_string(b);
  if (b < 0) inner += "-" + std::to_string(-b);
  if (a == 1 && b == 0) return "q^j";
  return "q^(" + inner + ")";
}

std::string rule_body_text(const Rule& r) {
  std::vector<std::string> parts;
  if (!r.c0.is_one())
    parts.push_back(r.c0.is_monomial() ? to_text(r.c0)
                                       : "(" + to_text(r.c0) + ")");
  if (r.a != 0 || r.b != 0) parts.push_back(q_power_text(r.a, r.b));

  std::string words;
  if (r.words.size() == 1 && r.words[0].sign > 0) {
    words = template_word_text(r.words[0].word);
    if (words == "1" && !parts.empty()) words.clear();
  } else {
    words = "(";
    bool first = true;
    for (const TSummand& s : r.words) {
      if (first) {
        if (s.sign < 0) words += "-";
      } else {
        words += s.sign < 0 ? " - " : " + ";
      }
      first = false;
      words += template_word_text(s.word);
    }
    words += ")";
  }
  if (!words.empty()) parts.push_back(words);
  if (parts.empty()) parts.push_back("1");

  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += " * ";
    out += p;
  }
  return out;
}

std::string eval_image_text(const EvalImage& img) {
  std::vector<std::string> parts;
  if (!img.mono.is_unit()) parts.push_back(monomial_body(img.mono));
  if (img.qj == 1) parts.push_back("q^j");
  if (img.qj != 0 && img.qj != 1)
    parts.push_back("q^(" + std::to_string(img.qj) + "*j)");
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += " * ";
    out += p;
  }
  if (out.empty()) out = "1";
  return img.sign < 0 ? "-" + out : out;
}

}  // namespace

ParsedGrammar parse_grammar(const std::string& text) {
  return DslParser(text).run();
}

std::string to_dsl(const Grammar& g, const EvalMap* eval, const Expr* seed) {
  std::string out;
  if (!g.name.empty()) out += "grammar " + g.name + ";\n";
  out += "masters ";
  for (std::size_t i = 0; i < g.masters.size(); ++i) {
    if (i > 0) out += ", ";
    out += master_name(g.masters[i]);
  }
  out += ";\norder " + std::string(order_name(g.order)) + ";\n";
  for (MasterId m : g.masters) {
    auto it = g.rules.find(m);
    if (it == g.rules.end()) continue;
    out += "rule " + master_name(m) + "[j] -> " + rule_body_text(it->second) +
           ";\n";
  }
  if (eval != nullptr) {
    for (MasterId m : g.masters) {
      if (!eval->has(m)) continue;
      out += "eval " + master_name(m) + "[j] -> " +
             eval_image_text(eval->image(m)) + ";\n";
    }
  }
  if (seed != nullptr) out += "seed " + to_text(*seed) + ";\n";
  return out;
}

}  // namespace qgram

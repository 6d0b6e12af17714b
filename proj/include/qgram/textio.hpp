#pragma once

#include <optional>
#include <string>

#include "qgram/evalmap.hpp"
#include "qgram/freealg.hpp"
#include "qgram/grammar.hpp"
#include "qgram/qseries.hpp"

namespace qgram {

/*
 * Canonical text forms.  Polynomials print as integer-coefficient sums of
 * name^exp products with * separators, in display order, e.g. 1+q or
 * 2*q^2*x^-1.  Words print letters as m[i] or m[i]^-1 joined by *, the empty
 * word as 1.  Expressions print coefficient-first terms joined by signs,
 * with multi-term coefficients parenthesized.  Parsing accepts any
 * whitespace and parenthesization; printing is stable, so parse then print
 * is the identity on printed output.
 */
std::string to_text(const QPoly& p);
std::string to_text(const Word& w);
std::string to_text(const Expr& a);
std::string to_text(const ESeries& f);

QPoly parse_qpoly(const std::string& text);
Expr parse_expr(const std::string& text);

struct ParsedGrammar {
  Grammar grammar;
  std::optional<EvalMap> eval;
  std::optional<Expr> seed;
};

/*
 * Grammar description language.  Clauses end with ; and # starts a comment:
 *   grammar G_inv;
 *   masters x, y;
 *   order AIO;
 *   rule x[j] -> q^j * y[j]*x[j+1];
 *   eval x[j] -> x;
 *   seed x[0];
 * Rule indexes are j, j+c or integer literals; the coefficient is a power
 * q^(a*j+b) times a j-free polynomial; the body is one word or one
 * parenthesized sum of words.
 */
ParsedGrammar parse_grammar(const std::string& text);

std::string to_dsl(const Grammar& g, const EvalMap* eval = nullptr,
                   const Expr* seed = nullptr);

}  // namespace qgram

#pragma once

/*
 * JSON serialization for the core value types.  Every to_json emits a
 * canonical form: object keys sorted, compact separators, terms in the
 * container's canonical order.  serialize -> parse -> serialize is a
 * fixpoint, so golden files can compare bytes.
 *
 * Shapes:
 *   QPoly    [{"coeff":"<decimal>","exponents":{"q":2,...}}, ...]
 *   Word     [{"index":0,"master":"x","sign":1}, ...]
 *   Expr     {"terms":[{"coeff":<QPoly>,"word":<Word>}, ...]}
 *   ESeries  {"coeffs":[<QPoly>...],"order":N}
 *   Grammar  {"masters":[...],"name":"...","order":"KSO","rules":[...]}
 *            with optional "eval" and "seed" members when supplied.
 *
 * from_json validates shape and types; any violation (wrong type, missing
 * member, unknown order name, coefficient that is not an integer) raises
 * Err::SchemaError.
 */

#include <string>

#include "qgram/evalmap.hpp"
#include "qgram/freealg.hpp"
#include "qgram/grammar.hpp"
#include "qgram/qpoly.hpp"
#include "qgram/qseries.hpp"
#include "qgram/textio.hpp"

namespace qgram {

std::string to_json(const QPoly& p);
std::string to_json(const Word& w);
std::string to_json(const Expr& a);
std::string to_json(const ESeries& f);
std::string to_json(const Grammar& g, const EvalMap* eval = nullptr,
                    const Expr* seed = nullptr);

QPoly qpoly_from_json(const std::string& text);
Word word_from_json(const std::string& text);
Expr expr_from_json(const std::string& text);
ESeries eseries_from_json(const std::string& text);
ParsedGrammar grammar_from_json(const std::string& text);

}  // namespace qgram

#pragma once

#include "pqsym/cqsym.hpp"
#include "pqsym/lincomb.hpp"
#include "pqsym/words.hpp"

#include <string>
#include <variant>

namespace pqsym {

/* Result of evaluating one expression.  The grammar:
 *
 *   sum      := product (('+' | '-') product)*
 *   product  := tensor  (('*' | '·') tensor)*
 *   tensor   := internal ('(x)' internal)*
 *   internal := unary (('⊛' | '.i.' | 'istar') unary)*
 *   unary    := '-' unary | atom
 *   atom     := INT | '[' word ']' | '(' sum ')'
 *             | F[..] | G[..] | P[..] | R[..] | M[..] | J(n) | S[..] | Rib[..]
 *             | Delta(e) | iDelta(e) | park(word) | std(word)
 *             | toBasis(e, TAG) | project(e)
 *
 * so the internal product binds tightest, then tensor, then the external
 * product, then sums.  Word indices accept comma form and compact digits. */
struct Value {
    std::variant<Int, Word, LinComb, Tensor, NSymElement> v;
};

// parses and evaluates; ParseError on syntax, ExprTypeError on bad operands
Value eval_expression(const std::string& text);

// canonical text form; feeding it back through eval_expression reproduces the value
std::string value_to_string(const Value& v);

std::string value_to_json(const Value& v);

} // namespace pqsym

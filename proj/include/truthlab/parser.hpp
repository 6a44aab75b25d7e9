#pragma once

#include <string>
#include <variant>

#include "truthlab/syntax.hpp"

namespace truthlab {

// Canonical text forms. Terms: 0, S(t), (t + t), (t * t), v<k>.
// Formulas: (t = t), P(t), ~f, (f | f), E v<k> f.
// print(parse(s)) == s for canonical strings and parse(print(x)) == x always.
std::string print_term(const Term& t);
std::string print_formula(const Formula& f);

// Sugar (f & f), A v<k> f, (f -> f) expands at parse time. Redundant
// parentheses around a formula are tolerated on input, never printed.
// Throws ParseError with a 1-based column on garbage.
Term parse_term(const std::string& s);
Formula parse_formula(const std::string& s);

// Either, decided by what the text is: formula first, then term.
std::variant<Term, Formula> parse_any(const std::string& s);

}  // namespace truthlab

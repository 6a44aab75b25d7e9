#pragma once

#include <gmpxx.h>

#include <variant>
#include <vector>

#include "truthlab/syntax.hpp"

namespace truthlab {

// Unbounded natural; Goedel codes and exact term values live here.
using Nat = mpz_class;

// Cantor pairing pi(a,b) = (a+b)(a+b+1)/2 + b and its inverse. The pairing is
// a bijection N^2 -> N with pi(a,b) >= a and pi(a,b) >= b.
Nat cantor_pair(const Nat& a, const Nat& b);
std::pair<Nat, Nat> cantor_unpair(const Nat& z);

// Node tags of the coding scheme (frozen; see docs/coding.md):
//   terms    0 Zero | 1 Succ | 2 Add | 3 Mul | 4 Var
//   formulas 5 Eq   | 6 P    | 7 Not | 8 Or  | 9 Exists
// code(node) = pi(tag, payload); payload pairs the children left to right.
// Parent codes strictly exceed child codes (monotone-subterm property).
inline constexpr unsigned kTagZero = 0, kTagSucc = 1, kTagAdd = 2, kTagMul = 3, kTagVar = 4,
                          kTagEq = 5, kTagPred = 6, kTagNot = 7, kTagOr = 8, kTagExists = 9;
Nat encode(const Term& t);
Nat encode(const Formula& f);

// Total: any natural decodes to a Term, a Formula, or Invalid (monostate).
using Decoded = std::variant<std::monostate, Term, Formula>;
Decoded decode(const Nat& code);

// Code-level recognizers for the P-free fragment.
bool is_closed_term(const Nat& code);    // closed term of L_PA
bool is_sentence(const Nat& code);       // closed P-free formula
bool is_formula_le1(const Nat& code);    // P-free formula, at most 1 free var

// Universal closure of
//   (A v (phi -> phi[v := S(v)])) -> (phi[v := 0] -> A v phi).
Formula ind_instance(const Formula& phi, VarIndex v);

// Length-prefixed sequence code: pi(n, pi(c1, pi(c2, ... pi(cn, 0)))).
Nat seq_code(const std::vector<Nat>& codes);

}  // namespace truthlab

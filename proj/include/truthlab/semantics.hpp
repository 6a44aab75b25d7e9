#pragma once

#include <set>
#include <string>

#include "truthlab/coding.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

enum class TruthValue3 : std::uint8_t { False, Undefined, True };

std::string to_string(TruthValue3 v);

inline TruthValue3 tv3(bool b) { return b ? TruthValue3::True : TruthValue3::False; }
inline TruthValue3 tv3_not(TruthValue3 v) {
  if (v == TruthValue3::Undefined) return v;
  return v == TruthValue3::True ? TruthValue3::False : TruthValue3::True;
}

enum class Scheme : std::uint8_t { StrongKleene, WeakKleene };

// Standard model restricted to quantifier domain {0..n_bound}; term arithmetic
// stays exact over unbounded naturals. p_positive/p_negative give the oracle's
// partial extension/anti-extension and must be disjoint.
struct BoundedStructure {
  std::uint64_t n_bound = 0;
  std::set<Nat> p_positive;
  std::set<Nat> p_negative;

  BoundedStructure() = default;
  BoundedStructure(std::uint64_t n, std::set<Nat> pos, std::set<Nat> neg);

  bool p_decides(const Nat& v) const { return p_positive.count(v) || p_negative.count(v); }
};

// Assignment of exact natural values; needed when instantiating variables at
// values of arbitrary closed terms.
using NatAssignment = std::map<VarIndex, Nat>;

// Exact value of a term; every free variable must be assigned.
// Throws UnassignedVariable otherwise.
Nat eval_term(const Term& t, const Assignment& sigma = {});
Nat eval_term(const Term& t, const NatAssignment& sigma);

// Two-valued Tarskian evaluation; quantifiers range over {0..n_bound}.
// Throws OracleInClassical if P occurs.
bool eval_classical(const Formula& f, const BoundedStructure& m, const Assignment& sigma = {});
bool eval_classical(const Formula& f, const BoundedStructure& m, const NatAssignment& sigma);

// Three-valued evaluation. Equalities are classical; P(t) is True/False/
// Undefined by p_positive/p_negative membership of the term value; Not flips
// and preserves Undefined. Strong Kleene: Or is True if either disjunct is
// True, False if both are False; Exists is True if some instance is True,
// False if all are False. Weak Kleene: any Undefined input makes the
// compound Undefined, otherwise classical.
TruthValue3 eval3(const Formula& f, const BoundedStructure& m, Scheme scheme,
                  const Assignment& sigma = {});
TruthValue3 eval3(const Formula& f, const BoundedStructure& m, Scheme scheme,
                  const NatAssignment& sigma);

// Classical evaluation with P read as total membership in p_ext (everything
// outside is false). Backs the commutativity checks that compare partial
// substitution against a classically interpreted predicate.
bool eval_classical_with_pred(const Formula& f, const BoundedStructure& m,
                              const std::set<Nat>& p_ext, const Assignment& sigma = {});

// phi has at most one free variable (else TooManyFreeVars); true iff every
// instance over {0..n_bound} is decided under the scheme.
bool is_total(const Formula& phi, const BoundedStructure& m, Scheme scheme);

}  // namespace truthlab

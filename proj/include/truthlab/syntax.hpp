#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "truthlab/errors.hpp"

namespace truthlab {

using VarIndex = std::uint64_t;

// Immutable first-order terms over 0, S, +, *. Value type; copies share nodes.
class Term {
 public:
  enum class Kind : std::uint8_t { Zero, Succ, Add, Mul, Var };

  struct Node;

  Term();  // Zero

  Kind kind() const;
  VarIndex var_index() const;  // Var only
  Term arg() const;            // Succ
  Term lhs() const;            // Add/Mul
  Term rhs() const;            // Add/Mul

  // Structural hash, stable across runs and processes.
  std::uint64_t hash() const;
  // Free variables, sorted ascending, no duplicates.
  const std::vector<VarIndex>& free_vars() const;
  bool closed() const { return free_vars().empty(); }
  std::size_t node_count() const;

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

 private:
  friend class Formula;
  friend Term succ(Term t);
  friend Term add(Term a, Term b);
  friend Term mul(Term a, Term b);
  friend Term var(VarIndex v);
  friend Term zero();
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Term zero();
Term succ(Term t);
Term add(Term a, Term b);
Term mul(Term a, Term b);
Term var(VarIndex v);

// 0 under n applications of S.
Term numeral(std::uint64_t n);

// Formulas of L_PA extended with the unary oracle predicate P. The core
// connectives are exactly Eq, P, Not, Or, Exists; everything else is built by
// the derived constructors below and expands at construction time.
class Formula {
 public:
  enum class Kind : std::uint8_t { Eq, Pred, Not, Or, Exists };

  struct Node;

  Formula();  // 0 = 0

  Kind kind() const;
  Term lhs() const;        // Eq
  Term rhs() const;        // Eq
  Term pred_arg() const;   // Pred
  Formula body() const;    // Not, Exists
  Formula left() const;    // Or
  Formula right() const;   // Or
  VarIndex bound_var() const;  // Exists

  std::uint64_t hash() const;
  // Number of logical nodes (Not, Or, Exists); atomic formulas have depth 0.
  std::size_t depth() const;
  const std::vector<VarIndex>& free_vars() const;
  bool closed() const { return free_vars().empty(); }
  // True iff P occurs, i.e. the formula lives in the extended language.
  bool has_pred() const;
  std::size_t node_count() const;

  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  friend Formula eq(Term a, Term b);
  friend Formula pred(Term t);
  friend Formula neg(Formula f);
  friend Formula disj(Formula a, Formula b);
  friend Formula exists(VarIndex v, Formula f);
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Formula eq(Term a, Term b);
Formula pred(Term t);
Formula neg(Formula f);
Formula disj(Formula a, Formula b);
Formula exists(VarIndex v, Formula f);

// Derived constructors; these expand and the result has no memory of them.
// conj(a,b) = ~(~a | ~b), forall(v,f) = ~E v ~f, implies(a,b) = (~a | b).
Formula conj(Formula a, Formula b);
Formula forall(VarIndex v, Formula f);
Formula implies(Formula a, Formula b);

inline const std::vector<VarIndex>& free_vars(const Formula& f) { return f.free_vars(); }
inline const std::vector<VarIndex>& free_vars(const Term& t) { return t.free_vars(); }

std::size_t depth(const Formula& f);

// Replace every free occurrence of v by t. Substituting into terms never
// changes formula depth. Throws CaptureError if a free variable of t would be
// bound at some occurrence.
Term subst_term(const Term& s, VarIndex v, const Term& t);
Formula subst_term(const Formula& f, VarIndex v, const Term& t);

// Syntactic identity up to renaming of bound variables. A vacuous binder is
// not equivalent to its body.
bool alpha_eq(const Formula& a, const Formula& b);

// Bind all free variables with forall, ascending index order, outermost bound
// variable = least index.
Formula universal_closure(const Formula& f);

// Finite map from variable index to value; the domain must equal the free
// variables of the formula it is applied to.
using Assignment = std::map<VarIndex, std::uint64_t>;

// Substitute numeral(sigma(v)) for every free v. Throws AssignmentMismatch
// unless dom(sigma) == free_vars(f) exactly.
Formula apply_assignment(const Formula& f, const Assignment& sigma);

// Rewrite every P(t) with non-variable t to E w ((w = t) & P(w)), w fresh.
// The result is semirelational: P applied to variables only.
Formula to_semirelational(const Formula& f);
bool is_semirelational(const Formula& f);

// eta[xi/P]: replace each P(v) by xi with xi's free variable renamed to v.
// Pre: eta semirelational (else NotSemirelational); xi has at most one free
// variable; the caller has renamed eta's bound variables away from xi's.
Formula subst_predicate(const Formula& eta, const Formula& xi);

// Largest variable index occurring (bound or free) plus one; 0 if none.
VarIndex var_bound(const Formula& f);

struct TermHash {
  std::size_t operator()(const Term& t) const { return static_cast<std::size_t>(t.hash()); }
};
struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return static_cast<std::size_t>(f.hash()); }
};

}  // namespace truthlab

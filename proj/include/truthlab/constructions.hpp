#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "truthlab/coding.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

// Caps on generated objects; exceeding one is a hard CapExceeded, never
// silent truncation.
inline constexpr std::size_t kFormulaNodeCap = 100'000;
inline constexpr std::uint64_t kNumeralValueCap = 24;

// Indexed family with a generator descriptor; accessor total on [0, size).
class FormulaFamily {
 public:
  FormulaFamily() = default;
  FormulaFamily(std::string kind, std::map<std::string, std::uint64_t> params,
                std::vector<Formula> items)
      : kind_(std::move(kind)), params_(std::move(params)), items_(std::move(items)) {}

  const std::string& kind() const { return kind_; }
  const std::map<std::string, std::uint64_t>& params() const { return params_; }
  std::size_t size() const { return items_.size(); }
  const Formula& at(std::size_t i) const;  // IndexOutOfRange beyond size

 private:
  std::string kind_;
  std::map<std::string, std::uint64_t> params_;
  std::vector<Formula> items_;
};

// x < y as the standard Sigma_0 shape E w (x + S(w) = y) with w fresh for the
// arguments; closed comparisons between construction-time constants inline
// the witness so bounded evaluation stays exact at any domain size.
Formula lt(const Term& a, const Term& b);
Formula le_closed(std::uint64_t i, std::uint64_t b);
Formula gt_closed(std::uint64_t i, std::uint64_t b);

// Alternative with stopping condition, by backwards recursion from index c:
//   V_c     = and(alpha_c, beta_c)
//   V_k     = and( Not(and(alpha_k, Not beta_k)),
//                  Or( and(alpha_k, beta_k), and(Not alpha_k, V_{k+1}) ) )
// Returns V_{i0}. Lists must be the same nonempty length; i0 < that length.
Formula stopping_disjunction(const std::vector<Formula>& alphas,
                             const std::vector<Formula>& betas, std::size_t i0);

// Evaluation report for the stopping construction. The stopping index j0 is
// scan-defined: the least j with alpha_j True provided alpha_k is False for
// every k < j (an earlier Undefined alpha leaves j0 undefined). The headline
// equivalence (value of the disjunction = value of beta_{j0}, and the same
// for the negations) is asserted only when j0 is defined and beta_k is
// decided for all k <= j0; otherwise the report is marked not applicable.
struct StoppingReport {
  TruthValue3 disjunction_value = TruthValue3::Undefined;
  TruthValue3 negation_value = TruthValue3::Undefined;
  std::optional<std::size_t> stop_index;
  std::optional<TruthValue3> beta_at_stop;
  bool preconditions_hold = false;
  bool applicable = false;
  bool agrees = false;
};

StoppingReport check_stopping_semantics(const std::vector<Formula>& alphas,
                                        const std::vector<Formula>& betas,
                                        const BoundedStructure& m, Scheme scheme);

// Fixed enumeration of standard formulas: decode(i) when that is a P-free
// formula, else the fallback 0=0. Total; every P-free formula appears at its
// own code.
Formula enumerate_formula(const Nat& i);

// The pairing relation as a quantifier-free equation over the given terms:
//   2*x = (a+b)*(a+b+1) + 2*b.
Formula pairing_equation(const Term& a, const Term& b, const Term& x);

// Recognizer RZ_i(phi, t): t is the length-prefixed sequence code of the
// component term codes for the free variables of enumerate_formula(i)
// (ascending order), and phi is the code of the formula with those terms
// substituted in. Composition is expressed node by node through the pairing
// equation with one existential per auxiliary code, so bounded evaluation
// verifies an instance exactly when all intermediate codes are <= n_bound.
Formula instance_recognizer(const Nat& i, VarIndex var_phi, VarIndex var_t);

// Satisfier SF_i(t): the components of t are numeral codes and the decoded
// values satisfy enumerate_formula(i). Numeral decoding is an unrolled
// pairing chain for values up to kNumeralValueCap; larger values make the
// instance undetectable (under-approximation, documented deviation).
Formula instance_satisfier(const Nat& i, VarIndex var_t);

// tau(phi, t) for parameters b (frozen as a numeral) and c (syntactic shape):
//   alpha_i = RZ_i(phi, t) or i > b,   beta_i = SF_i(t) and i <= b,
//   tau = stopping disjunction of the alpha/beta lists from index 0.
struct TauFamily {
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  VarIndex var_phi = 0;
  VarIndex var_t = 1;
  FormulaFamily alphas;
  FormulaFamily betas;
  Formula tau;
};

TauFamily tau_family(std::uint64_t b, std::uint64_t c);

// Right-nested disjunction ending in the refutable atom:
//   (psi_0 | (psi_1 | ... (psi_{n-1} | ~(v0 = v0)) ...)).
Formula theta_chain(const std::vector<Formula>& psis);

// Type-omission measures over x = v0, y = v1, with the bound as a numeral:
//   alpha_0 = ~(x < a) | ~phi_0(x)
//   alpha_j = x < a & phi_0(x) & ... & phi_{j-1}(x) & ~phi_j(x)   (j >= 1)
//   beta_j  = y < a & phi_0(y) & ... & phi_{j+1}(y)
// Conjunction chains fold left. j ranges over 0..len(phis)-2.
struct OmissionFamily {
  VarIndex var_x = 0;
  VarIndex var_y = 1;
  FormulaFamily alphas;
  FormulaFamily betas;
};

OmissionFamily omission_family(const std::vector<Formula>& phis, std::uint64_t a_bound);

// Evaluation-level internal induction on phi with at most one free variable:
// base T(phi(0)), progressivity over {0..n_bound-1}, conclusion over
// {0..n_bound}, with T read as eval3 = True. Violated carries the least
// failing point of the conclusion.
enum class IntStatus : std::uint8_t { Holds, PremiseFails, Violated };

struct IntResult {
  IntStatus status = IntStatus::Holds;
  std::optional<std::uint64_t> witness;
};

IntResult internal_induction_check(const Formula& phi, const BoundedStructure& m, Scheme scheme);

std::string to_string(IntStatus s);

}  // namespace truthlab

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "truthlab/fixpoint.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

// Audits check axiom families of positive truth theories against a candidate
// truth set A over a sentence universe U, reading T(psi) as psi-in-A. A clause
// instance is checked only when every sentence it consults is a member of U;
// otherwise it is skipped and counted, never guessed. tot(psi), where it
// appears, is (psi in A) or (~psi in A), computed purely from membership.

struct Witness {
  Formula subject;
  std::string detail;
};

struct ClauseResult {
  std::string clause;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<Witness> violations;

  ClauseResult() = default;
  explicit ClauseResult(std::string name) : clause(std::move(name)) {}
  bool pass() const { return violations.empty(); }
};

struct AuditReport {
  std::string theory;
  std::vector<ClauseResult> clauses;
  bool pass() const;
  std::size_t violation_count() const;
};

// Deterministic work bound for the regularity sweep and the UTB instance
// product; excess candidates are counted as skipped.
inline constexpr std::size_t kAuditPairCap = 20'000;

// PT- clause audit: atomic clauses 1a/1b, disjunction 2a/2b, quantifier 3a/3b,
// double negation 4, term regularity 5, plus the flagged P-extension clauses
// p+ / p- for the oracle predicate. Throws NotInUniverse if A's universe is
// not U, Error if U and M disagree on the domain bound.
AuditReport check_pt_minus(const BoundedStructure& m, const TruthSet& a,
                           const SentenceUniverse& u);

// WPT- clause audit: same atomic and negative clauses as PT-, tot-guarded
// positive clauses 2a/3a, plus the provable derived clauses d-and, d-neg-and,
// d-all, d-neg-all as secondary checks.
AuditReport check_wpt_minus(const BoundedStructure& m, const TruthSet& a,
                            const SentenceUniverse& u);

// UTB- instance audit: for each P-free template phi(x1..xn), every universe
// member matching the template is compared against classical truth at the
// matched values, and every instance built from an n-tuple over `terms` that
// lies outside the universe is counted as skipped. One clause per template.
// Throws Error if a template mentions P or a term is open.
AuditReport check_utb(const BoundedStructure& m, const TruthSet& a,
                      const std::vector<Formula>& templates,
                      const std::vector<Term>& terms);

// NEG audit: T(~phi) == not T(phi) for every member phi with ~phi also a
// member.
AuditReport check_neg(const BoundedStructure& m, const TruthSet& a,
                      const SentenceUniverse& u);

// CC(phi) under the literal membership reading (a sentence outside U is not
// in A): true iff some correctness-clause disjunct holds of phi. The negation
// disjunct is the classical flip T(~psi) == not T(psi), stricter than PT-.
// The regularity disjunct requires exactly one free variable and is therefore
// false for every universe member. Throws NotInUniverse if phi is not in U.
bool check_cc(const BoundedStructure& m, const TruthSet& a,
              const SentenceUniverse& u, const Formula& phi);

// CC sweep over all members; members whose consulted disjunct referent lies
// outside U are skipped. Violations list the members where CC fails.
AuditReport cc_audit(const BoundedStructure& m, const TruthSet& a,
                     const SentenceUniverse& u);

// GC(phi): T(ucl(phi)) == (phi[sigma] in A for every assignment sigma mapping
// the free variables into {0..N}). Throws NotInUniverse listing the missing
// closure or instances.
bool check_gc(const BoundedStructure& m, const TruthSet& a,
              const SentenceUniverse& u, const Formula& phi);

// GC sweep over the given formulas; formulas whose closure or instances lie
// outside U are skipped.
AuditReport gc_audit(const BoundedStructure& m, const TruthSet& a,
                     const SentenceUniverse& u, const std::vector<Formula>& phis);

// T(IND) audit: for each phi (at most one free variable), checks that the
// coded induction instance ind(phi) is in A; instances outside U are skipped.
AuditReport check_truth_of_induction(const BoundedStructure& m, const TruthSet& a,
                                     const SentenceUniverse& u,
                                     const std::vector<Formula>& phis);

// Internal induction audit over the truth set: for each phi(v), if T holds of
// phi(0) and is preserved from phi(x) to phi(x+1) across {0..N-1}, then T must
// hold of every phi(x). Instances outside U skip the formula. With tot_only,
// formulas whose instances are not all decided (phi(x) in A or ~phi(x) in A)
// are skipped as well. Violations carry the least failing x.
AuditReport check_int(const BoundedStructure& m, const TruthSet& a,
                      const SentenceUniverse& u, const std::vector<Formula>& phis,
                      bool tot_only);

}  // namespace truthlab

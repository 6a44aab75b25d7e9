#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

namespace truthlab {

inline constexpr std::size_t kDefaultUniverseCap = 1'000'000;

class TruthSet;

// Finite set of sentences closed under everything the one-step operator
// consults: direct subsentences of Or, instances of Exists bodies over
// {0..n_bound}, negations required by the negative clauses, and
// double-negation reducts. Cheap to copy (shared immutable state).
class SentenceUniverse {
 public:
  struct Impl;

  std::size_t size() const;
  const Formula& member(std::size_t i) const;
  const std::vector<Formula>& members() const;
  std::optional<std::size_t> index_of(const Formula& f) const;
  bool contains(const Formula& f) const;
  // The structure the universe was instantiated against (fixes n_bound).
  const BoundedStructure& structure() const;
  bool same_universe(const SentenceUniverse& o) const { return impl_ == o.impl_; }

 private:
  friend class TruthSet;
  friend SentenceUniverse build_universe(const std::vector<Formula>&, const BoundedStructure&,
                                         std::size_t);
  friend bool theta(const Formula&, const TruthSet&, const BoundedStructure&,
                    const SentenceUniverse&);
  friend TruthSet gamma(const TruthSet&, const BoundedStructure&, const SentenceUniverse&);
  friend TruthSet gamma_serial(const TruthSet&, const BoundedStructure&,
                               const SentenceUniverse&);
  explicit SentenceUniverse(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Subset of a universe's members. Iteration order is universe order.
class TruthSet {
 public:
  explicit TruthSet(const SentenceUniverse& u);
  TruthSet(const SentenceUniverse& u, std::vector<char> bits);

  const SentenceUniverse& universe() const { return u_; }
  bool contains(const Formula& f) const;
  bool contains_index(std::size_t i) const { return bits_[i] != 0; }
  void insert(const Formula& f);  // NotInUniverse if f is no member
  void insert_index(std::size_t i) { bits_[i] = 1; }
  void erase(const Formula& f);
  std::size_t size() const;
  bool subset_of(const TruthSet& o) const;
  bool operator==(const TruthSet& o) const;
  bool operator!=(const TruthSet& o) const { return !(*this == o); }
  std::vector<Formula> members() const;
  const std::vector<char>& bits() const { return bits_; }

 private:
  SentenceUniverse u_;
  std::vector<char> bits_;
};

// BFS closure from the seed; members keep first-seen order. Seed sentences
// must be closed (P allowed). Throws UniverseTooLarge beyond cap.
SentenceUniverse build_universe(const std::vector<Formula>& seed, const BoundedStructure& m,
                                std::size_t cap = kDefaultUniverseCap);

// One step of the operator on a single sentence; the direct transcription of
// the defining clauses, kept as the serial reference. phi must be a member.
//   s=t true by value; ~(s=t) by disvalue; P(t)/~P(t) by the oracle sets;
//   ~~psi if psi in A; psi1|psi2 if either in A; ~(psi1|psi2) if both
//   negations in A; E v psi if some instance in A; ~E v psi if all negated
//   instances in A.
bool theta(const Formula& phi, const TruthSet& a, const BoundedStructure& m,
           const SentenceUniverse& u);

// gamma(A) = { phi in U : theta(phi, A) }. `gamma` evaluates members in
// parallel over precompiled clause plans (each member writes its own slot, so
// the merge is deterministic set union); `gamma_serial` loops over `theta`.
// Both require m.n_bound to match the universe's structure.
TruthSet gamma(const TruthSet& a, const BoundedStructure& m, const SentenceUniverse& u);
TruthSet gamma_serial(const TruthSet& a, const BoundedStructure& m, const SentenceUniverse& u);

// Entry stages of fixpoint members: stage 0 holds gamma(empty).
struct FixpointTrace {
  std::vector<std::int64_t> entry;  // by universe index, -1 = never entered
  std::size_t total_stages = 0;     // least n with gamma^{n+2}(empty) == gamma^{n+1}(empty)
};

struct LfpResult {
  TruthSet fixpoint;
  FixpointTrace trace;
};

// Iterate gamma from the empty set to the least fixed point (full-pass jump
// semantics). `parallel` switches the kernel; results are identical.
LfpResult least_fixpoint(const SentenceUniverse& u, const BoundedStructure& m,
                         bool parallel = true);

// Match candidate = tmpl(t0..tn): every free variable of tmpl maps to a
// closed term, consistently across occurrences; bound structure matches
// exactly. Returns the substitution or nullopt.
std::optional<std::map<VarIndex, Term>> match_template(const Formula& tmpl,
                                                       const Formula& candidate);

// Tr' = members that are template instances classically true at the term
// values; Tr = closure of Tr' under alpha-equivalence within U.
TruthSet tr_construction(const BoundedStructure& m, const std::vector<Formula>& templates,
                         const SentenceUniverse& u);

}  // namespace truthlab

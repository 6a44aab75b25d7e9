#pragma once

// Seeded random syntax generators shared by the property tests. Everything
// here is deterministic for a fixed seed, so failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "truthlab/syntax.hpp"

namespace truthlab::testutil {

using Rng = std::mt19937_64;

struct GenOpts {
  std::size_t max_depth = 4;   // logical-connective budget
  std::size_t term_depth = 2;  // term-constructor budget
  VarIndex var_span = 3;       // bound variables drawn from [0, var_span)
  bool allow_pred = false;     // emit P-atoms
};

inline std::uint64_t pick(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

// Random term over the given variable scope (free occurrences only come from
// `scope`; closed when scope is empty).
inline Term random_term(Rng& rng, const std::vector<VarIndex>& scope, std::size_t depth) {
  const std::uint64_t kinds = scope.empty() ? 4 : 5;
  switch (depth == 0 ? pick(rng, scope.empty() ? 1 : 2) * 4 : pick(rng, kinds)) {
    case 1: return succ(random_term(rng, scope, depth - 1));
    case 2: return add(random_term(rng, scope, depth - 1), random_term(rng, scope, depth - 1));
    case 3: return mul(random_term(rng, scope, depth - 1), random_term(rng, scope, depth - 1));
    case 4: return var(scope[pick(rng, scope.size())]);
    default: return pick(rng, 3) == 0 ? numeral(pick(rng, 4)) : zero();
  }
}

inline Formula random_formula_scoped(Rng& rng, const GenOpts& o, std::vector<VarIndex> scope,
                                     std::size_t depth) {
  if (depth == 0 || pick(rng, 5) == 0) {
    if (o.allow_pred && pick(rng, 3) == 0)
      return pred(random_term(rng, scope, o.term_depth));
    return eq(random_term(rng, scope, o.term_depth), random_term(rng, scope, o.term_depth));
  }
  switch (pick(rng, 3)) {
    case 0: return neg(random_formula_scoped(rng, o, scope, depth - 1));
    case 1:
      return disj(random_formula_scoped(rng, o, scope, depth - 1),
                  random_formula_scoped(rng, o, scope, depth - 1));
    default: {
      const VarIndex v = pick(rng, o.var_span);
      scope.push_back(v);
      return exists(v, random_formula_scoped(rng, o, std::move(scope), depth - 1));
    }
  }
}

// Closed formula (a sentence; P-atoms only if opted in).
inline Formula random_sentence(Rng& rng, const GenOpts& o = {}) {
  return random_formula_scoped(rng, o, {}, o.max_depth);
}

// Formula that may keep free variables from [0, var_span).
inline Formula random_open_formula(Rng& rng, const GenOpts& o = {}) {
  std::vector<VarIndex> scope;
  for (VarIndex v = 0; v < o.var_span; ++v) scope.push_back(v);
  return random_formula_scoped(rng, o, std::move(scope), o.max_depth);
}

}  // namespace truthlab::testutil

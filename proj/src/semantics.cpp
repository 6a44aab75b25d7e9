#include "truthlab/semantics.hpp"

#include <map>
#include <optional>

namespace truthlab {

std::string to_string(TruthValue3 v) {
  switch (v) {
    case TruthValue3::True:
      return "True";
    case TruthValue3::False:
      return "False";
    case TruthValue3::Undefined:
      return "Undefined";
  }
  return "Undefined";
}

BoundedStructure::BoundedStructure(std::uint64_t n, std::set<Nat> pos, std::set<Nat> neg)
    : n_bound(n), p_positive(std::move(pos)), p_negative(std::move(neg)) {
  for (const Nat& v : p_positive)
    if (p_negative.count(v))
      throw Error("p_positive and p_negative overlap at " + v.get_str());
}

namespace {

// Environment-based evaluation; quantifiers extend the environment instead of
// substituting numerals, which agrees with numeral substitution on values.
using Env = std::map<VarIndex, Nat>;

Nat eval_term_env(const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return 0;
    case Term::Kind::Succ:
      return eval_term_env(t.arg(), env) + 1;
    case Term::Kind::Add:
      return eval_term_env(t.lhs(), env) + eval_term_env(t.rhs(), env);
    case Term::Kind::Mul:
      return eval_term_env(t.lhs(), env) * eval_term_env(t.rhs(), env);
    case Term::Kind::Var: {
      auto it = env.find(t.var_index());
      if (it == env.end())
        throw UnassignedVariable("no value for v" + std::to_string(t.var_index()));
      return it->second;
    }
  }
  return 0;
}

bool eval_classical_env(const Formula& f, const BoundedStructure& m, Env& env,
                        const std::set<Nat>* p_ext) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return eval_term_env(f.lhs(), env) == eval_term_env(f.rhs(), env);
    case Formula::Kind::Pred:
      if (!p_ext) throw OracleInClassical("P occurs under classical evaluation");
      return p_ext->count(eval_term_env(f.pred_arg(), env)) != 0;
    case Formula::Kind::Not:
      return !eval_classical_env(f.body(), m, env, p_ext);
    case Formula::Kind::Or:
      return eval_classical_env(f.left(), m, env, p_ext) ||
             eval_classical_env(f.right(), m, env, p_ext);
    case Formula::Kind::Exists: {
      VarIndex v = f.bound_var();
      auto saved = env.find(v) != env.end() ? std::optional<Nat>(env[v]) : std::nullopt;
      bool found = false;
      for (std::uint64_t x = 0; x <= m.n_bound && !found; ++x) {
        env[v] = x;
        found = eval_classical_env(f.body(), m, env, p_ext);
      }
      if (saved)
        env[v] = *saved;
      else
        env.erase(v);
      return found;
    }
  }
  return false;
}

TruthValue3 eval3_env(const Formula& f, const BoundedStructure& m, Scheme scheme, Env& env) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return tv3(eval_term_env(f.lhs(), env) == eval_term_env(f.rhs(), env));
    case Formula::Kind::Pred: {
      Nat v = eval_term_env(f.pred_arg(), env);
      if (m.p_positive.count(v)) return TruthValue3::True;
      if (m.p_negative.count(v)) return TruthValue3::False;
      return TruthValue3::Undefined;
    }
    case Formula::Kind::Not:
      return tv3_not(eval3_env(f.body(), m, scheme, env));
    case Formula::Kind::Or: {
      TruthValue3 a = eval3_env(f.left(), m, scheme, env);
      if (scheme == Scheme::StrongKleene && a == TruthValue3::True) return TruthValue3::True;
      TruthValue3 b = eval3_env(f.right(), m, scheme, env);
      if (scheme == Scheme::StrongKleene) {
        if (a == TruthValue3::True || b == TruthValue3::True) return TruthValue3::True;
        if (a == TruthValue3::False && b == TruthValue3::False) return TruthValue3::False;
        return TruthValue3::Undefined;
      }
      if (a == TruthValue3::Undefined || b == TruthValue3::Undefined)
        return TruthValue3::Undefined;
      return tv3(a == TruthValue3::True || b == TruthValue3::True);
    }
    case Formula::Kind::Exists: {
      VarIndex v = f.bound_var();
      auto saved = env.find(v) != env.end() ? std::optional<Nat>(env[v]) : std::nullopt;
      bool any_true = false, any_undef = false;
      for (std::uint64_t x = 0; x <= m.n_bound; ++x) {
        env[v] = x;
        TruthValue3 val = eval3_env(f.body(), m, scheme, env);
        if (val == TruthValue3::True) any_true = true;
        if (val == TruthValue3::Undefined) any_undef = true;
        if (scheme == Scheme::StrongKleene && any_true) break;
      }
      if (saved)
        env[v] = *saved;
      else
        env.erase(v);
      if (scheme == Scheme::StrongKleene) {
        if (any_true) return TruthValue3::True;
        return any_undef ? TruthValue3::Undefined : TruthValue3::False;
      }
      if (any_undef) return TruthValue3::Undefined;
      return tv3(any_true);
    }
  }
  return TruthValue3::Undefined;
}

Env env_of(const Assignment& sigma) {
  Env env;
  for (const auto& [v, n] : sigma) env.emplace(v, Nat(static_cast<unsigned long>(n)));
  return env;
}

template <class Sigma>
void check_domain(const Formula& f, const Sigma& sigma) {
  const auto& fv = f.free_vars();
  if (sigma.size() != fv.size())
    throw AssignmentMismatch("assignment domain differs from free variables");
  for (VarIndex v : fv)
    if (!sigma.count(v)) throw AssignmentMismatch("no value for v" + std::to_string(v));
}

}  // namespace

Nat eval_term(const Term& t, const Assignment& sigma) {
  Env env = env_of(sigma);
  return eval_term_env(t, env);
}

Nat eval_term(const Term& t, const NatAssignment& sigma) { return eval_term_env(t, sigma); }

bool eval_classical(const Formula& f, const BoundedStructure& m, const NatAssignment& sigma) {
  check_domain(f, sigma);
  Env env = sigma;
  return eval_classical_env(f, m, env, nullptr);
}

TruthValue3 eval3(const Formula& f, const BoundedStructure& m, Scheme scheme,
                  const NatAssignment& sigma) {
  check_domain(f, sigma);
  Env env = sigma;
  return eval3_env(f, m, scheme, env);
}

bool eval_classical(const Formula& f, const BoundedStructure& m, const Assignment& sigma) {
  check_domain(f, sigma);
  Env env = env_of(sigma);
  return eval_classical_env(f, m, env, nullptr);
}

bool eval_classical_with_pred(const Formula& f, const BoundedStructure& m,
                              const std::set<Nat>& p_ext, const Assignment& sigma) {
  check_domain(f, sigma);
  Env env = env_of(sigma);
  return eval_classical_env(f, m, env, &p_ext);
}

TruthValue3 eval3(const Formula& f, const BoundedStructure& m, Scheme scheme,
                  const Assignment& sigma) {
  check_domain(f, sigma);
  Env env = env_of(sigma);
  return eval3_env(f, m, scheme, env);
}

bool is_total(const Formula& phi, const BoundedStructure& m, Scheme scheme) {
  const auto& fv = phi.free_vars();
  if (fv.size() > 1) throw TooManyFreeVars("is_total needs at most one free variable");
  if (fv.empty()) return eval3(phi, m, scheme) != TruthValue3::Undefined;
  for (std::uint64_t x = 0; x <= m.n_bound; ++x) {
    Assignment sigma{{fv[0], x}};
    if (eval3(phi, m, scheme, sigma) == TruthValue3::Undefined) return false;
  }
  return true;
}

}  // namespace truthlab

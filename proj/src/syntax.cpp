#include "truthlab/syntax.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace truthlab {

namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return mix(seed * 0x9e3779b97f4a7c15ull + v + 0x2545f4914f6cdd1dull);
}

std::vector<VarIndex> merge_fv(const std::vector<VarIndex>& a, const std::vector<VarIndex>& b) {
  std::vector<VarIndex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool fv_contains(const std::vector<VarIndex>& fv, VarIndex v) {
  return std::binary_search(fv.begin(), fv.end(), v);
}

}  // namespace

// --- Term nodes ---

struct Term::Node {
  Kind kind = Kind::Zero;
  VarIndex var = 0;
  std::shared_ptr<const Node> a, b;
  std::uint64_t hash = 0;
  std::size_t nodes = 1;
  std::vector<VarIndex> fv;
};

namespace {

using TermNodePtr = std::shared_ptr<const Term::Node>;

const TermNodePtr& zero_node() {
  static const TermNodePtr n = [] {
    auto m = std::make_shared<Term::Node>();
    m->kind = Term::Kind::Zero;
    m->hash = hash_combine(0x7e3a5c11u, 0);
    return TermNodePtr(std::move(m));
  }();
  return n;
}

}  // namespace

Term::Term() : node_(zero_node()) {}

Term::Kind Term::kind() const { return node_->kind; }
VarIndex Term::var_index() const { return node_->var; }
Term Term::arg() const { return Term(node_->a); }
Term Term::lhs() const { return Term(node_->a); }
Term Term::rhs() const { return Term(node_->b); }
std::uint64_t Term::hash() const { return node_->hash; }
const std::vector<VarIndex>& Term::free_vars() const { return node_->fv; }
std::size_t Term::node_count() const { return node_->nodes; }

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Zero:
      return true;
    case Kind::Var:
      return node_->var == o.node_->var;
    case Kind::Succ:
      return Term(node_->a) == Term(o.node_->a);
    case Kind::Add:
    case Kind::Mul:
      return Term(node_->a) == Term(o.node_->a) && Term(node_->b) == Term(o.node_->b);
  }
  return false;
}

Term zero() { return Term(zero_node()); }

Term succ(Term t) {
  auto n = std::make_shared<Term::Node>();
  n->kind = Term::Kind::Succ;
  n->hash = hash_combine(hash_combine(0x7e3a5c11u, 1), t.hash());
  n->nodes = 1 + t.node_count();
  n->fv = t.free_vars();
  n->a = std::move(t.node_);
  return Term(std::move(n));
}

Term add(Term a, Term b) {
  auto n = std::make_shared<Term::Node>();
  n->kind = Term::Kind::Add;
  n->hash = hash_combine(hash_combine(hash_combine(0x7e3a5c11u, 2), a.hash()), b.hash());
  n->nodes = 1 + a.node_count() + b.node_count();
  n->fv = merge_fv(a.free_vars(), b.free_vars());
  n->a = std::move(a.node_);
  n->b = std::move(b.node_);
  return Term(std::move(n));
}

Term mul(Term a, Term b) {
  auto n = std::make_shared<Term::Node>();
  n->kind = Term::Kind::Mul;
  n->hash = hash_combine(hash_combine(hash_combine(0x7e3a5c11u, 3), a.hash()), b.hash());
  n->nodes = 1 + a.node_count() + b.node_count();
  n->fv = merge_fv(a.free_vars(), b.free_vars());
  n->a = std::move(a.node_);
  n->b = std::move(b.node_);
  return Term(std::move(n));
}

Term var(VarIndex v) {
  auto n = std::make_shared<Term::Node>();
  n->kind = Term::Kind::Var;
  n->var = v;
  n->hash = hash_combine(hash_combine(0x7e3a5c11u, 4), v);
  n->fv = {v};
  return Term(std::move(n));
}

Term numeral(std::uint64_t n) {
  Term t = zero();
  for (std::uint64_t i = 0; i < n; ++i) t = succ(std::move(t));
  return t;
}

// --- Formula nodes ---

struct Formula::Node {
  Kind kind = Kind::Eq;
  VarIndex var = 0;
  Term t1, t2;
  std::shared_ptr<const Node> f1, f2;
  std::uint64_t hash = 0;
  std::size_t depth = 0;
  std::size_t nodes = 1;
  bool has_pred = false;
  std::vector<VarIndex> fv;
};

namespace {

using FormulaNodePtr = std::shared_ptr<const Formula::Node>;

const FormulaNodePtr& trivial_eq_node() {
  static const FormulaNodePtr n = [] {
    auto m = std::make_shared<Formula::Node>();
    m->kind = Formula::Kind::Eq;
    m->hash = hash_combine(hash_combine(hash_combine(0x51f0ab42u, 0), zero().hash()), zero().hash());
    m->nodes = 3;
    return FormulaNodePtr(std::move(m));
  }();
  return n;
}

}  // namespace

Formula::Formula() : node_(trivial_eq_node()) {}

Formula::Kind Formula::kind() const { return node_->kind; }
Term Formula::lhs() const { return node_->t1; }
Term Formula::rhs() const { return node_->t2; }
Term Formula::pred_arg() const { return node_->t1; }
Formula Formula::body() const { return Formula(node_->f1); }
Formula Formula::left() const { return Formula(node_->f1); }
Formula Formula::right() const { return Formula(node_->f2); }
VarIndex Formula::bound_var() const { return node_->var; }
std::uint64_t Formula::hash() const { return node_->hash; }
std::size_t Formula::depth() const { return node_->depth; }
const std::vector<VarIndex>& Formula::free_vars() const { return node_->fv; }
bool Formula::has_pred() const { return node_->has_pred; }
std::size_t Formula::node_count() const { return node_->nodes; }

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->hash != o.node_->hash || node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Eq:
      return node_->t1 == o.node_->t1 && node_->t2 == o.node_->t2;
    case Kind::Pred:
      return node_->t1 == o.node_->t1;
    case Kind::Not:
      return Formula(node_->f1) == Formula(o.node_->f1);
    case Kind::Or:
      return Formula(node_->f1) == Formula(o.node_->f1) && Formula(node_->f2) == Formula(o.node_->f2);
    case Kind::Exists:
      return node_->var == o.node_->var && Formula(node_->f1) == Formula(o.node_->f1);
  }
  return false;
}

Formula eq(Term a, Term b) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Eq;
  n->hash = hash_combine(hash_combine(hash_combine(0x51f0ab42u, 0), a.hash()), b.hash());
  n->nodes = 1 + a.node_count() + b.node_count();
  n->fv = merge_fv(a.free_vars(), b.free_vars());
  n->t1 = std::move(a);
  n->t2 = std::move(b);
  return Formula(std::move(n));
}

Formula pred(Term t) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Pred;
  n->hash = hash_combine(hash_combine(0x51f0ab42u, 1), t.hash());
  n->nodes = 1 + t.node_count();
  n->fv = t.free_vars();
  n->has_pred = true;
  n->t1 = std::move(t);
  return Formula(std::move(n));
}

Formula neg(Formula f) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Not;
  n->hash = hash_combine(hash_combine(0x51f0ab42u, 2), f.hash());
  n->depth = f.depth() + 1;
  n->nodes = 1 + f.node_count();
  n->has_pred = f.has_pred();
  n->fv = f.free_vars();
  n->f1 = std::move(f.node_);
  return Formula(std::move(n));
}

Formula disj(Formula a, Formula b) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Or;
  n->hash = hash_combine(hash_combine(hash_combine(0x51f0ab42u, 3), a.hash()), b.hash());
  n->depth = std::max(a.depth(), b.depth()) + 1;
  n->nodes = 1 + a.node_count() + b.node_count();
  n->has_pred = a.has_pred() || b.has_pred();
  n->fv = merge_fv(a.free_vars(), b.free_vars());
  n->f1 = std::move(a.node_);
  n->f2 = std::move(b.node_);
  return Formula(std::move(n));
}

Formula exists(VarIndex v, Formula f) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = Formula::Kind::Exists;
  n->var = v;
  n->hash = hash_combine(hash_combine(hash_combine(0x51f0ab42u, 4), v), f.hash());
  n->depth = f.depth() + 1;
  n->nodes = 1 + f.node_count();
  n->has_pred = f.has_pred();
  n->fv.reserve(f.free_vars().size());
  for (VarIndex x : f.free_vars())
    if (x != v) n->fv.push_back(x);
  n->f1 = std::move(f.node_);
  return Formula(std::move(n));
}

Formula conj(Formula a, Formula b) { return neg(disj(neg(std::move(a)), neg(std::move(b)))); }
Formula forall(VarIndex v, Formula f) { return neg(exists(v, neg(std::move(f)))); }
Formula implies(Formula a, Formula b) { return disj(neg(std::move(a)), std::move(b)); }

std::size_t depth(const Formula& f) { return f.depth(); }

// --- substitution ---

namespace {

Term subst_term_rec(const Term& s, VarIndex v, const Term& t) {
  if (!fv_contains(s.free_vars(), v)) return s;
  switch (s.kind()) {
    case Term::Kind::Zero:
      return s;
    case Term::Kind::Var:
      return s.var_index() == v ? t : s;
    case Term::Kind::Succ:
      return succ(subst_term_rec(s.arg(), v, t));
    case Term::Kind::Add:
      return add(subst_term_rec(s.lhs(), v, t), subst_term_rec(s.rhs(), v, t));
    case Term::Kind::Mul:
      return mul(subst_term_rec(s.lhs(), v, t), subst_term_rec(s.rhs(), v, t));
  }
  return s;
}

Formula subst_formula_rec(const Formula& f, VarIndex v, const Term& t) {
  if (!fv_contains(f.free_vars(), v)) return f;
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return eq(subst_term_rec(f.lhs(), v, t), subst_term_rec(f.rhs(), v, t));
    case Formula::Kind::Pred:
      return pred(subst_term_rec(f.pred_arg(), v, t));
    case Formula::Kind::Not:
      return neg(subst_formula_rec(f.body(), v, t));
    case Formula::Kind::Or:
      return disj(subst_formula_rec(f.left(), v, t), subst_formula_rec(f.right(), v, t));
    case Formula::Kind::Exists:
      // v is free in f, so the binder differs from v.
      if (fv_contains(t.free_vars(), f.bound_var()))
        throw CaptureError("substitution would capture v" + std::to_string(f.bound_var()));
      return exists(f.bound_var(), subst_formula_rec(f.body(), v, t));
  }
  return f;
}

}  // namespace

Term subst_term(const Term& s, VarIndex v, const Term& t) { return subst_term_rec(s, v, t); }

Formula subst_term(const Formula& f, VarIndex v, const Term& t) {
  return subst_formula_rec(f, v, t);
}

// --- alpha equivalence ---

namespace {

// Bound variables compare by binder level, free variables by name.
struct AlphaEnv {
  std::map<VarIndex, std::size_t> l, r;
  std::size_t level = 0;
};

bool alpha_term(const Term& a, const Term& b, const AlphaEnv& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Var: {
      auto la = env.l.find(a.var_index());
      auto rb = env.r.find(b.var_index());
      bool lb = la != env.l.end(), rbb = rb != env.r.end();
      if (lb || rbb) return lb && rbb && la->second == rb->second;
      return a.var_index() == b.var_index();
    }
    case Term::Kind::Succ:
      return alpha_term(a.arg(), b.arg(), env);
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return alpha_term(a.lhs(), b.lhs(), env) && alpha_term(a.rhs(), b.rhs(), env);
  }
  return false;
}

bool alpha_rec(const Formula& a, const Formula& b, AlphaEnv& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Eq:
      return alpha_term(a.lhs(), b.lhs(), env) && alpha_term(a.rhs(), b.rhs(), env);
    case Formula::Kind::Pred:
      return alpha_term(a.pred_arg(), b.pred_arg(), env);
    case Formula::Kind::Not:
      return alpha_rec(a.body(), b.body(), env);
    case Formula::Kind::Or:
      return alpha_rec(a.left(), b.left(), env) && alpha_rec(a.right(), b.right(), env);
    case Formula::Kind::Exists: {
      std::optional<std::size_t> saved_l, saved_r;
      if (auto it = env.l.find(a.bound_var()); it != env.l.end()) saved_l = it->second;
      if (auto it = env.r.find(b.bound_var()); it != env.r.end()) saved_r = it->second;
      env.l[a.bound_var()] = env.level;
      env.r[b.bound_var()] = env.level;
      ++env.level;
      bool ok = alpha_rec(a.body(), b.body(), env);
      --env.level;
      if (saved_l)
        env.l[a.bound_var()] = *saved_l;
      else
        env.l.erase(a.bound_var());
      if (saved_r)
        env.r[b.bound_var()] = *saved_r;
      else
        env.r.erase(b.bound_var());
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_eq(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a.depth() != b.depth() || a.free_vars() != b.free_vars()) return false;
  AlphaEnv env;
  return alpha_rec(a, b, env);
}

Formula universal_closure(const Formula& f) {
  const std::vector<VarIndex> fv = f.free_vars();
  Formula out = f;
  for (auto it = fv.rbegin(); it != fv.rend(); ++it) out = forall(*it, std::move(out));
  return out;
}

Formula apply_assignment(const Formula& f, const Assignment& sigma) {
  const auto& fv = f.free_vars();
  if (sigma.size() != fv.size())
    throw AssignmentMismatch("assignment domain differs from free variables");
  for (VarIndex v : fv)
    if (!sigma.count(v)) throw AssignmentMismatch("no value for v" + std::to_string(v));
  Formula out = f;
  for (const auto& [v, n] : sigma) out = subst_term(out, v, numeral(n));
  return out;
}

// --- semirelational form ---

namespace {

VarIndex term_var_bound(const Term& t) {
  VarIndex m = 0;
  for (VarIndex v : t.free_vars()) m = std::max(m, v + 1);
  return m;
}

}  // namespace

VarIndex var_bound(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return std::max(term_var_bound(f.lhs()), term_var_bound(f.rhs()));
    case Formula::Kind::Pred:
      return term_var_bound(f.pred_arg());
    case Formula::Kind::Not:
      return var_bound(f.body());
    case Formula::Kind::Or:
      return std::max(var_bound(f.left()), var_bound(f.right()));
    case Formula::Kind::Exists:
      return std::max(f.bound_var() + 1, var_bound(f.body()));
  }
  return 0;
}

namespace {

Formula semirel_rec(const Formula& f, VarIndex& fresh) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return f;
    case Formula::Kind::Pred: {
      if (f.pred_arg().kind() == Term::Kind::Var) return f;
      VarIndex w = fresh++;
      return exists(w, conj(eq(var(w), f.pred_arg()), pred(var(w))));
    }
    case Formula::Kind::Not:
      return neg(semirel_rec(f.body(), fresh));
    case Formula::Kind::Or: {
      Formula l = semirel_rec(f.left(), fresh);
      Formula r = semirel_rec(f.right(), fresh);
      return disj(std::move(l), std::move(r));
    }
    case Formula::Kind::Exists:
      return exists(f.bound_var(), semirel_rec(f.body(), fresh));
  }
  return f;
}

}  // namespace

Formula to_semirelational(const Formula& f) {
  if (is_semirelational(f)) return f;
  VarIndex fresh = var_bound(f);
  return semirel_rec(f, fresh);
}

bool is_semirelational(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return true;
    case Formula::Kind::Pred:
      return f.pred_arg().kind() == Term::Kind::Var;
    case Formula::Kind::Not:
      return is_semirelational(f.body());
    case Formula::Kind::Or:
      return is_semirelational(f.left()) && is_semirelational(f.right());
    case Formula::Kind::Exists:
      return is_semirelational(f.body());
  }
  return true;
}

namespace {

Formula subst_pred_rec(const Formula& f, const Formula& xi,
                       const std::optional<VarIndex>& xi_var) {
  if (!f.has_pred()) return f;
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return f;
    case Formula::Kind::Pred: {
      if (f.pred_arg().kind() != Term::Kind::Var)
        throw NotSemirelational("P applied to a non-variable term");
      VarIndex v = f.pred_arg().var_index();
      if (!xi_var || *xi_var == v) return xi;
      return subst_term(xi, *xi_var, var(v));
    }
    case Formula::Kind::Not:
      return neg(subst_pred_rec(f.body(), xi, xi_var));
    case Formula::Kind::Or:
      return disj(subst_pred_rec(f.left(), xi, xi_var),
                  subst_pred_rec(f.right(), xi, xi_var));
    case Formula::Kind::Exists:
      return exists(f.bound_var(), subst_pred_rec(f.body(), xi, xi_var));
  }
  return f;
}

}  // namespace

Formula subst_predicate(const Formula& eta, const Formula& xi) {
  const auto& xfv = xi.free_vars();
  if (xfv.size() > 1) throw TooManyFreeVars("xi must have at most one free variable");
  std::optional<VarIndex> xi_var;
  if (!xfv.empty()) xi_var = xfv[0];
  return subst_pred_rec(eta, xi, xi_var);
}

}  // namespace truthlab

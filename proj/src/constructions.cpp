#include "truthlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "truthlab/errors.hpp"
#include "truthlab/parser.hpp"

namespace truthlab {

namespace {
Term numeral_nat(const Nat& v);
}  // namespace

const Formula& FormulaFamily::at(std::size_t i) const {
  if (i >= items_.size())
    throw IndexOutOfRange("family index " + std::to_string(i) + " beyond size " +
                          std::to_string(items_.size()));
  return items_[i];
}

Formula lt(const Term& a, const Term& b) {
  if (a.free_vars().empty() && b.free_vars().empty()) {
    // Inline the witness so the closed comparison is exact at any domain
    // bound (a false instance keeps the shape with witness 0).
    const Nat va = eval_term(a), vb = eval_term(b);
    const Nat w = vb > va ? Nat(vb - va - 1) : Nat(0);
    return eq(add(a, succ(numeral_nat(w))), b);
  }
  VarIndex w = 0;
  for (VarIndex v : a.free_vars()) w = std::max(w, v + 1);
  for (VarIndex v : b.free_vars()) w = std::max(w, v + 1);
  return exists(w, eq(add(a, succ(var(w))), b));
}

Formula le_closed(std::uint64_t i, std::uint64_t b) {
  // i <= b as i + w = b with the witness w inlined (a false instance keeps
  // the shape with w = 0), so the value is exact at any domain bound.
  std::uint64_t w = i <= b ? b - i : 0;
  return eq(add(numeral(i), numeral(w)), numeral(b));
}

Formula gt_closed(std::uint64_t i, std::uint64_t b) {
  // i > b as b + S(w) = i with the witness inlined.
  std::uint64_t w = i > b ? i - b - 1 : 0;
  return eq(add(numeral(b), succ(numeral(w))), numeral(i));
}

Formula stopping_disjunction(const std::vector<Formula>& alphas,
                             const std::vector<Formula>& betas, std::size_t i0) {
  if (alphas.size() != betas.size())
    throw LengthMismatch("alpha and beta lists differ: " + std::to_string(alphas.size()) +
                         " vs " + std::to_string(betas.size()));
  if (alphas.empty()) throw LengthMismatch("stopping disjunction needs at least one index");
  if (i0 >= alphas.size())
    throw IndexOutOfRange("start index " + std::to_string(i0) + " beyond last index " +
                          std::to_string(alphas.size() - 1));
  std::size_t c = alphas.size() - 1;
  Formula acc = conj(alphas[c], betas[c]);
  for (std::size_t k = c; k-- > i0;)
    acc = conj(neg(conj(alphas[k], neg(betas[k]))),
               disj(conj(alphas[k], betas[k]), conj(neg(alphas[k]), acc)));
  return acc;
}

StoppingReport check_stopping_semantics(const std::vector<Formula>& alphas,
                                        const std::vector<Formula>& betas,
                                        const BoundedStructure& m, Scheme scheme) {
  if (alphas.size() != betas.size())
    throw LengthMismatch("alpha and beta lists differ: " + std::to_string(alphas.size()) +
                         " vs " + std::to_string(betas.size()));
  if (alphas.empty()) throw LengthMismatch("stopping check needs at least one index");
  for (const Formula& f : alphas)
    if (!f.closed()) throw Error("stopping check needs closed alphas: " + print_formula(f));
  for (const Formula& f : betas)
    if (!f.closed()) throw Error("stopping check needs closed betas: " + print_formula(f));

  std::vector<TruthValue3> av, bv;
  av.reserve(alphas.size());
  bv.reserve(betas.size());
  for (const Formula& f : alphas) av.push_back(eval3(f, m, scheme));
  for (const Formula& f : betas) bv.push_back(eval3(f, m, scheme));

  StoppingReport rep;
  Formula v = stopping_disjunction(alphas, betas, 0);
  rep.disjunction_value = eval3(v, m, scheme);
  rep.negation_value = eval3(neg(v), m, scheme);

  // Scan for the stopping index: earlier alphas must be outright False; an
  // Undefined alpha blocks the scan and leaves j0 undefined.
  for (std::size_t k = 0; k < av.size(); ++k) {
    if (av[k] == TruthValue3::False) continue;
    if (av[k] == TruthValue3::True) rep.stop_index = k;
    break;
  }

  if (rep.stop_index) {
    rep.beta_at_stop = bv[*rep.stop_index];
    rep.preconditions_hold = true;
    for (std::size_t k = 0; k <= *rep.stop_index; ++k)
      if (bv[k] == TruthValue3::Undefined) rep.preconditions_hold = false;
  }
  rep.applicable = rep.preconditions_hold;
  rep.agrees = rep.applicable && rep.disjunction_value == *rep.beta_at_stop &&
               rep.negation_value == tv3_not(*rep.beta_at_stop);
  return rep;
}

Formula enumerate_formula(const Nat& i) {
  Decoded d = decode(i);
  if (auto* f = std::get_if<Formula>(&d); f && !f->has_pred()) return *f;
  return eq(zero(), zero());
}

Formula pairing_equation(const Term& a, const Term& b, const Term& x) {
  Term s = add(a, b);
  return eq(mul(numeral(2), x), add(mul(s, add(s, numeral(1))), mul(numeral(2), b)));
}

namespace {

// Accumulates pairing-equation conjuncts and the existential prefix for the
// code-composition formulas. Auxiliaries quantify outermost-first in
// allocation order.
struct CodeRel {
  VarIndex next = 0;
  std::vector<VarIndex> aux;
  std::vector<Formula> conjuncts;

  VarIndex fresh() {
    aux.push_back(next);
    return next++;
  }
  void require_pair(const Term& a, const Term& b, const Term& x) {
    conjuncts.push_back(pairing_equation(a, b, x));
  }
};

Formula conj_fold(const std::vector<Formula>& fs) {
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

// Wraps the conjuncts in the existential prefix, attaching each conjunct just
// inside the innermost auxiliary it mentions. Bounded evaluation can then
// reject a witness as soon as its defining equation fails instead of
// enumerating the full witness grid.
Formula close_existentially(const CodeRel& cr, const std::vector<Formula>& conjuncts) {
  const std::set<VarIndex> auxset(cr.aux.begin(), cr.aux.end());
  std::map<VarIndex, std::vector<Formula>> at_level;
  std::vector<Formula> unbound;
  for (const Formula& c : conjuncts) {
    std::optional<VarIndex> deepest;
    for (const VarIndex v : c.free_vars())
      if (auxset.count(v) && (!deepest || v > *deepest)) deepest = v;
    if (deepest)
      at_level[*deepest].push_back(c);
    else
      unbound.push_back(c);
  }

  std::optional<Formula> body;
  for (auto it = cr.aux.rbegin(); it != cr.aux.rend(); ++it) {
    std::vector<Formula> level = at_level[*it];
    if (body) level.push_back(*body);
    // Every auxiliary is mentioned by the equation that introduced it, so a
    // level is never empty.
    body = exists(*it, conj_fold(level));
  }
  if (body) unbound.push_back(*body);
  Formula out = conj_fold(unbound);
  if (out.node_count() > kFormulaNodeCap)
    throw CapExceeded("generated formula exceeds node cap");
  return out;
}

Term numeral_nat(const Nat& v) {
  if (v > Nat(static_cast<unsigned long>(kFormulaNodeCap)))
    throw CapExceeded("numeral literal too large: " + v.get_str());
  return numeral(v.get_ui());
}

bool term_is_const(const Term& t, const std::map<VarIndex, VarIndex>& comp,
                   const std::set<VarIndex>& bound) {
  for (VarIndex v : t.free_vars())
    if (comp.count(v) && !bound.count(v)) return false;
  return true;
}

// Emits conjuncts tying a fresh variable to the code of the node with the
// component substitution applied; returns the term standing for that code.
// Subtrees without substitution positions collapse to their literal codes.
Term emit_term_code(const Term& t, CodeRel& cr, const std::map<VarIndex, VarIndex>& comp,
                    const std::set<VarIndex>& bound) {
  if (term_is_const(t, comp, bound)) return numeral_nat(encode(t));
  switch (t.kind()) {
    case Term::Kind::Var:
      return var(comp.at(t.var_index()));
    case Term::Kind::Succ: {
      Term c = emit_term_code(t.arg(), cr, comp, bound);
      VarIndex z = cr.fresh();
      cr.require_pair(numeral(kTagSucc), c, var(z));
      return var(z);
    }
    case Term::Kind::Add:
    case Term::Kind::Mul: {
      Term cl = emit_term_code(t.lhs(), cr, comp, bound);
      Term crr = emit_term_code(t.rhs(), cr, comp, bound);
      VarIndex p = cr.fresh();
      cr.require_pair(cl, crr, var(p));
      VarIndex z = cr.fresh();
      cr.require_pair(numeral(t.kind() == Term::Kind::Add ? kTagAdd : kTagMul), var(p), var(z));
      return var(z);
    }
    case Term::Kind::Zero:
      break;  // constant, handled above
  }
  return numeral_nat(encode(t));
}

// `target`, when given, receives the node's code in place of a fresh
// auxiliary. The recognizer passes its free phi-variable here, so the
// instance's own code never needs to fit under the domain bound.
Term emit_form_code(const Formula& f, CodeRel& cr, const std::map<VarIndex, VarIndex>& comp,
                    std::set<VarIndex>& bound,
                    const std::optional<Term>& target = std::nullopt) {
  const auto out_term = [&]() {
    return target ? *target : Term(var(cr.fresh()));
  };
  bool constant = true;
  for (VarIndex v : f.free_vars())
    if (comp.count(v) && !bound.count(v)) {
      constant = false;
      break;
    }
  if (constant) {
    const Term code = numeral_nat(encode(f));
    if (!target) return code;
    cr.conjuncts.push_back(eq(*target, code));
    return *target;
  }
  switch (f.kind()) {
    case Formula::Kind::Eq:
    case Formula::Kind::Or: {
      Term cl = f.kind() == Formula::Kind::Eq ? emit_term_code(f.lhs(), cr, comp, bound)
                                              : emit_form_code(f.left(), cr, comp, bound);
      Term crr = f.kind() == Formula::Kind::Eq ? emit_term_code(f.rhs(), cr, comp, bound)
                                               : emit_form_code(f.right(), cr, comp, bound);
      VarIndex p = cr.fresh();
      cr.require_pair(cl, crr, var(p));
      Term z = out_term();
      cr.require_pair(numeral(f.kind() == Formula::Kind::Eq ? kTagEq : kTagOr), var(p), z);
      return z;
    }
    case Formula::Kind::Pred: {
      Term c = emit_term_code(f.pred_arg(), cr, comp, bound);
      Term z = out_term();
      cr.require_pair(numeral(kTagPred), c, z);
      return z;
    }
    case Formula::Kind::Not: {
      Term c = emit_form_code(f.body(), cr, comp, bound);
      Term z = out_term();
      cr.require_pair(numeral(kTagNot), c, z);
      return z;
    }
    case Formula::Kind::Exists: {
      VarIndex bv = f.bound_var();
      bool shadowed = bound.count(bv) != 0;
      bound.insert(bv);
      Term c = emit_form_code(f.body(), cr, comp, bound);
      if (!shadowed) bound.erase(bv);
      VarIndex p = cr.fresh();
      cr.require_pair(numeral(bv), c, var(p));
      Term z = out_term();
      cr.require_pair(numeral(kTagExists), var(p), z);
      return z;
    }
  }
  return numeral_nat(encode(f));
}

// Appends the length-prefixed sequence decomposition of var_t into component
// variables u[0..A); returns the u indices.
std::vector<VarIndex> emit_seq_decomp(CodeRel& cr, VarIndex var_t, std::size_t arity) {
  std::vector<VarIndex> u(arity), r(arity);
  for (std::size_t k = 0; k < arity; ++k) u[k] = cr.fresh();
  for (std::size_t k = 0; k < arity; ++k) r[k] = cr.fresh();
  cr.require_pair(numeral(arity), var(r[0]), var(var_t));
  for (std::size_t k = 0; k < arity; ++k) {
    Term rest = k + 1 < arity ? Term(var(r[k + 1])) : numeral(0);
    cr.require_pair(var(u[k]), rest, var(r[k]));
  }
  return u;
}

// "u is the code of the numeral of v": unrolled pairing chains for values up
// to kNumeralValueCap. The chain witnesses are the intermediate numeral
// codes, so bounded evaluation detects value m only when those codes are
// within the domain.
Formula numeral_decode(VarIndex u, VarIndex v, VarIndex scratch) {
  std::vector<Formula> cases;
  cases.push_back(conj(eq(var(u), numeral(0)), eq(var(v), numeral(0))));
  for (std::uint64_t mval = 1; mval <= kNumeralValueCap; ++mval) {
    // chain u = pi(1, w1), w1 = pi(1, w2), ..., w_{m-1} = pi(1, 0), with each
    // witness bound right at its defining equation so bounded evaluation
    // walks the chain instead of enumerating the witness grid.
    const auto link = [&](std::uint64_t j) {
      return j == 0 ? Term(var(u)) : Term(var(scratch + j - 1));
    };
    Formula body = pairing_equation(numeral(kTagSucc), numeral(0), link(mval - 1));
    for (std::uint64_t j = mval - 1; j >= 1; --j)
      body = exists(scratch + j - 1,
                    conj(pairing_equation(numeral(kTagSucc), link(j), link(j - 1)), body));
    cases.push_back(conj(eq(var(v), numeral(mval)), body));
  }
  Formula acc = cases.back();
  for (std::size_t k = cases.size() - 1; k-- > 0;) acc = disj(cases[k], acc);
  return acc;
}

}  // namespace

Formula instance_recognizer(const Nat& i, VarIndex var_phi, VarIndex var_t) {
  Formula f = enumerate_formula(i);
  const auto& fv = f.free_vars();
  std::size_t arity = fv.size();
  if (arity == 0)
    return conj(eq(var(var_t), numeral(0)), eq(var(var_phi), numeral_nat(encode(f))));

  CodeRel cr;
  cr.next = std::max({var_phi + 1, var_t + 1, var_bound(f)});
  std::vector<VarIndex> u = emit_seq_decomp(cr, var_t, arity);
  std::map<VarIndex, VarIndex> comp;
  for (std::size_t k = 0; k < arity; ++k) comp[fv[k]] = u[k];
  std::set<VarIndex> bound;
  emit_form_code(f, cr, comp, bound, var(var_phi));
  return close_existentially(cr, cr.conjuncts);
}

Formula instance_satisfier(const Nat& i, VarIndex var_t) {
  Formula f = enumerate_formula(i);
  const auto& fv = f.free_vars();
  std::size_t arity = fv.size();
  // A closed enumerand accepts only the empty parameter sequence.
  if (arity == 0) return conj(eq(var(var_t), numeral(0)), f);

  CodeRel cr;
  cr.next = std::max<VarIndex>(var_t + 1, var_bound(f));
  std::vector<VarIndex> u = emit_seq_decomp(cr, var_t, arity);
  std::vector<VarIndex> vals(arity);
  for (std::size_t k = 0; k < arity; ++k) vals[k] = cr.fresh();
  // Chain-local witnesses reuse indices above every registered auxiliary.
  VarIndex scratch = cr.next;
  for (std::size_t k = 0; k < arity; ++k)
    cr.conjuncts.push_back(numeral_decode(u[k], vals[k], scratch));
  Formula inst = f;
  for (std::size_t k = 0; k < arity; ++k) inst = subst_term(inst, fv[k], var(vals[k]));
  cr.conjuncts.push_back(inst);
  return close_existentially(cr, cr.conjuncts);
}

TauFamily tau_family(std::uint64_t b, std::uint64_t c) {
  TauFamily out;
  out.b = b;
  out.c = c;
  std::vector<Formula> alphas, betas;
  for (std::uint64_t i = 0; i <= c; ++i) {
    alphas.push_back(
        disj(instance_recognizer(Nat(static_cast<unsigned long>(i)), out.var_phi, out.var_t),
             gt_closed(i, b)));
    betas.push_back(conj(instance_satisfier(Nat(static_cast<unsigned long>(i)), out.var_t),
                         le_closed(i, b)));
  }
  out.tau = stopping_disjunction(alphas, betas, 0);
  if (out.tau.node_count() > kFormulaNodeCap)
    throw CapExceeded("tau exceeds node cap at c = " + std::to_string(c));
  std::map<std::string, std::uint64_t> params{{"b", b}, {"c", c}};
  out.alphas = FormulaFamily("tau-alpha", params, std::move(alphas));
  out.betas = FormulaFamily("tau-beta", params, std::move(betas));
  return out;
}

Formula theta_chain(const std::vector<Formula>& psis) {
  if (psis.empty()) throw EmptyList("theta chain needs at least one disjunct");
  Formula acc = neg(eq(var(0), var(0)));
  for (auto it = psis.rbegin(); it != psis.rend(); ++it) acc = disj(*it, acc);
  return acc;
}

OmissionFamily omission_family(const std::vector<Formula>& phis, std::uint64_t a_bound) {
  if (phis.size() < 2)
    throw IndexOutOfRange("omission family needs at least two formulas");
  OmissionFamily out;
  VarIndex w = std::max<VarIndex>(out.var_y + 1, 0);
  for (const Formula& p : phis) w = std::max(w, var_bound(p));
  auto less = [&](VarIndex x) {
    return exists(w, eq(add(var(x), succ(var(w))), numeral(a_bound)));
  };
  // Index j is defined whenever phi_{j+1} exists, for alphas and betas both:
  // the pair lists feed a stopping disjunction, which needs equal lengths.
  std::size_t count = phis.size() - 1;
  std::vector<Formula> alphas, betas;
  for (std::size_t j = 0; j < count; ++j) {
    if (j == 0) {
      alphas.push_back(disj(neg(less(out.var_x)), neg(phis[0])));
    } else {
      Formula acc = less(out.var_x);
      for (std::size_t k = 0; k < j; ++k) acc = conj(acc, phis[k]);
      alphas.push_back(conj(acc, neg(phis[j])));
    }
    Formula bacc = less(out.var_y);
    for (std::size_t k = 0; k <= j + 1; ++k)
      bacc = conj(bacc, subst_term(phis[k], out.var_x, var(out.var_y)));
    betas.push_back(bacc);
  }
  std::map<std::string, std::uint64_t> params{{"a", a_bound}};
  out.alphas = FormulaFamily("omission-alpha", params, std::move(alphas));
  out.betas = FormulaFamily("omission-beta", params, std::move(betas));
  return out;
}

IntResult internal_induction_check(const Formula& phi, const BoundedStructure& m,
                                   Scheme scheme) {
  const auto& fv = phi.free_vars();
  if (fv.size() > 1)
    throw TooManyFreeVars("internal induction needs at most one free variable");
  if (fv.empty()) {
    if (eval3(phi, m, scheme) == TruthValue3::True) return {IntStatus::Holds, std::nullopt};
    return {IntStatus::PremiseFails, std::nullopt};
  }
  VarIndex v = fv[0];
  auto at = [&](std::uint64_t x) { return eval3(phi, m, scheme, Assignment{{v, x}}); };

  bool premise = at(0) == TruthValue3::True;
  for (std::uint64_t x = 0; premise && x < m.n_bound; ++x)
    if (at(x) == TruthValue3::True && at(x + 1) != TruthValue3::True) premise = false;
  if (!premise) return {IntStatus::PremiseFails, std::nullopt};

  for (std::uint64_t x = 0; x <= m.n_bound; ++x)
    if (at(x) != TruthValue3::True) return {IntStatus::Violated, x};
  return {IntStatus::Holds, std::nullopt};
}

std::string to_string(IntStatus s) {
  switch (s) {
    case IntStatus::Holds:
      return "Holds";
    case IntStatus::PremiseFails:
      return "PremiseFails";
    case IntStatus::Violated:
      return "Violated";
  }
  return "Holds";
}

}  // namespace truthlab

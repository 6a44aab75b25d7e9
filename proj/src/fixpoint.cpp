#include "truthlab/fixpoint.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <unordered_map>
#include <utility>

#include "truthlab/errors.hpp"
#include "truthlab/parser.hpp"

namespace truthlab {

struct SentenceUniverse::Impl {
  BoundedStructure m;
  std::vector<Formula> members;
  std::unordered_map<Formula, std::size_t, FormulaHash> index;

  // Per-member clause plan; atoms store term values so a gamma pass is pure
  // index and set-lookup work.
  enum class Op : std::uint8_t { Atom, DoubleNeg, Disj, NegDisj, ExistsAny, NegExistsAll };
  struct Atom {
    bool is_pred = false;
    bool negated = false;
    Nat v1;
    Nat v2;
  };
  struct Plan {
    Op op = Op::Atom;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
  };
  std::vector<Plan> plans;
  std::vector<Atom> atoms;
  std::vector<std::uint32_t> pool;  // instance member indices for quantifier plans
};

std::size_t SentenceUniverse::size() const { return impl_->members.size(); }
const Formula& SentenceUniverse::member(std::size_t i) const { return impl_->members.at(i); }
const std::vector<Formula>& SentenceUniverse::members() const { return impl_->members; }

std::optional<std::size_t> SentenceUniverse::index_of(const Formula& f) const {
  auto it = impl_->index.find(f);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

bool SentenceUniverse::contains(const Formula& f) const { return impl_->index.count(f) != 0; }
const BoundedStructure& SentenceUniverse::structure() const { return impl_->m; }

TruthSet::TruthSet(const SentenceUniverse& u) : u_(u), bits_(u.size(), 0) {}

TruthSet::TruthSet(const SentenceUniverse& u, std::vector<char> bits)
    : u_(u), bits_(std::move(bits)) {
  if (bits_.size() != u_.size()) throw Error("bit vector size differs from universe size");
}

bool TruthSet::contains(const Formula& f) const {
  auto i = u_.index_of(f);
  return i && bits_[*i] != 0;
}

void TruthSet::insert(const Formula& f) {
  auto i = u_.index_of(f);
  if (!i) throw NotInUniverse("not a universe member: " + print_formula(f));
  bits_[*i] = 1;
}

void TruthSet::erase(const Formula& f) {
  auto i = u_.index_of(f);
  if (!i) throw NotInUniverse("not a universe member: " + print_formula(f));
  bits_[*i] = 0;
}

std::size_t TruthSet::size() const {
  return static_cast<std::size_t>(std::count_if(bits_.begin(), bits_.end(),
                                                [](char c) { return c != 0; }));
}

bool TruthSet::subset_of(const TruthSet& o) const {
  if (!u_.same_universe(o.u_)) throw NotInUniverse("subset check across distinct universes");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !o.bits_[i]) return false;
  return true;
}

bool TruthSet::operator==(const TruthSet& o) const {
  return u_.same_universe(o.u_) && bits_ == o.bits_;
}

std::vector<Formula> TruthSet::members() const {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(u_.member(i));
  return out;
}

namespace {

Formula instance_at(const Formula& ex, std::uint64_t x) {
  return subst_term(ex.body(), ex.bound_var(), numeral(x));
}

}  // namespace

SentenceUniverse build_universe(const std::vector<Formula>& seed, const BoundedStructure& m,
                                std::size_t cap) {
  auto impl = std::make_shared<SentenceUniverse::Impl>();
  impl->m = m;

  auto add = [&](const Formula& f) {
    auto [it, fresh] = impl->index.emplace(f, impl->members.size());
    if (!fresh) return;
    impl->members.push_back(f);
    if (impl->members.size() > cap)
      throw UniverseTooLarge("universe closure exceeds cap of " + std::to_string(cap));
  };

  for (const Formula& f : seed) {
    if (!f.closed()) throw Error("universe seed must be sentences: " + print_formula(f));
    add(f);
  }

  // The members vector is the BFS queue; closure adds what the clauses for a
  // member consult, so every later lookup stays inside the universe.
  for (std::size_t i = 0; i < impl->members.size(); ++i) {
    const Formula f = impl->members[i];
    switch (f.kind()) {
      case Formula::Kind::Or:
        add(f.left());
        add(f.right());
        break;
      case Formula::Kind::Exists:
        for (std::uint64_t x = 0; x <= m.n_bound; ++x) add(instance_at(f, x));
        break;
      case Formula::Kind::Not: {
        const Formula g = f.body();
        switch (g.kind()) {
          case Formula::Kind::Not:
            add(g.body());
            break;
          case Formula::Kind::Or:
            add(neg(g.left()));
            add(neg(g.right()));
            break;
          case Formula::Kind::Exists:
            for (std::uint64_t x = 0; x <= m.n_bound; ++x) add(neg(instance_at(g, x)));
            break;
          default:
            break;
        }
        break;
      }
      default:
        break;
    }
  }

  using Impl = SentenceUniverse::Impl;
  const auto at = [&](const Formula& f) {
    return static_cast<std::uint32_t>(impl->index.at(f));
  };
  impl->plans.resize(impl->members.size());
  for (std::size_t i = 0; i < impl->members.size(); ++i) {
    const Formula& f = impl->members[i];
    Impl::Plan p;
    auto atom = [&](bool is_pred, bool negated, Nat v1, Nat v2) {
      p.op = Impl::Op::Atom;
      p.a = static_cast<std::uint32_t>(impl->atoms.size());
      impl->atoms.push_back({is_pred, negated, std::move(v1), std::move(v2)});
    };
    switch (f.kind()) {
      case Formula::Kind::Eq:
        atom(false, false, eval_term(f.lhs()), eval_term(f.rhs()));
        break;
      case Formula::Kind::Pred:
        atom(true, false, eval_term(f.pred_arg()), 0);
        break;
      case Formula::Kind::Or:
        p.op = Impl::Op::Disj;
        p.a = at(f.left());
        p.b = at(f.right());
        break;
      case Formula::Kind::Exists: {
        p.op = Impl::Op::ExistsAny;
        p.begin = static_cast<std::uint32_t>(impl->pool.size());
        for (std::uint64_t x = 0; x <= m.n_bound; ++x)
          impl->pool.push_back(at(instance_at(f, x)));
        p.end = static_cast<std::uint32_t>(impl->pool.size());
        break;
      }
      case Formula::Kind::Not: {
        const Formula g = f.body();
        switch (g.kind()) {
          case Formula::Kind::Eq:
            atom(false, true, eval_term(g.lhs()), eval_term(g.rhs()));
            break;
          case Formula::Kind::Pred:
            atom(true, true, eval_term(g.pred_arg()), 0);
            break;
          case Formula::Kind::Not:
            p.op = Impl::Op::DoubleNeg;
            p.a = at(g.body());
            break;
          case Formula::Kind::Or:
            p.op = Impl::Op::NegDisj;
            p.a = at(neg(g.left()));
            p.b = at(neg(g.right()));
            break;
          case Formula::Kind::Exists: {
            p.op = Impl::Op::NegExistsAll;
            p.begin = static_cast<std::uint32_t>(impl->pool.size());
            for (std::uint64_t x = 0; x <= m.n_bound; ++x)
              impl->pool.push_back(at(neg(instance_at(g, x))));
            p.end = static_cast<std::uint32_t>(impl->pool.size());
            break;
          }
        }
        break;
      }
    }
    impl->plans[i] = p;
  }

  return SentenceUniverse(std::move(impl));
}

namespace {

void require_compatible(const TruthSet& a, const BoundedStructure& m, const SentenceUniverse& u) {
  if (!a.universe().same_universe(u))
    throw NotInUniverse("truth set is bound to a different universe");
  if (m.n_bound != u.structure().n_bound)
    throw Error("structure bound differs from the universe's bound");
}

}  // namespace

bool theta(const Formula& phi, const TruthSet& a, const BoundedStructure& m,
           const SentenceUniverse& u) {
  require_compatible(a, m, u);
  if (!u.contains(phi))
    throw NotInUniverse("theta argument is not a universe member: " + print_formula(phi));
  switch (phi.kind()) {
    case Formula::Kind::Eq:
      return eval_term(phi.lhs()) == eval_term(phi.rhs());
    case Formula::Kind::Pred:
      return m.p_positive.count(eval_term(phi.pred_arg())) != 0;
    case Formula::Kind::Or:
      return a.contains(phi.left()) || a.contains(phi.right());
    case Formula::Kind::Exists:
      for (std::uint64_t x = 0; x <= m.n_bound; ++x)
        if (a.contains(instance_at(phi, x))) return true;
      return false;
    case Formula::Kind::Not: {
      const Formula g = phi.body();
      switch (g.kind()) {
        case Formula::Kind::Eq:
          return eval_term(g.lhs()) != eval_term(g.rhs());
        case Formula::Kind::Pred:
          return m.p_negative.count(eval_term(g.pred_arg())) != 0;
        case Formula::Kind::Not:
          return a.contains(g.body());
        case Formula::Kind::Or:
          return a.contains(neg(g.left())) && a.contains(neg(g.right()));
        case Formula::Kind::Exists:
          for (std::uint64_t x = 0; x <= m.n_bound; ++x)
            if (!a.contains(neg(instance_at(g, x)))) return false;
          return true;
      }
      return false;
    }
  }
  return false;
}

TruthSet gamma(const TruthSet& a, const BoundedStructure& m, const SentenceUniverse& u) {
  require_compatible(a, m, u);
  const SentenceUniverse::Impl& im = *u.impl_;
  using Impl = SentenceUniverse::Impl;

  std::vector<char> atom_truth(im.atoms.size(), 0);
  for (std::size_t i = 0; i < im.atoms.size(); ++i) {
    const Impl::Atom& at = im.atoms[i];
    bool t;
    if (at.is_pred)
      t = at.negated ? m.p_negative.count(at.v1) != 0 : m.p_positive.count(at.v1) != 0;
    else
      t = at.negated ? at.v1 != at.v2 : at.v1 == at.v2;
    atom_truth[i] = t ? 1 : 0;
  }

  const std::vector<char>& in = a.bits();
  std::vector<char> out(im.members.size(), 0);
  const auto n = static_cast<std::int64_t>(im.members.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const Impl::Plan& p = im.plans[static_cast<std::size_t>(i)];
    char r = 0;
    switch (p.op) {
      case Impl::Op::Atom:
        r = atom_truth[p.a];
        break;
      case Impl::Op::DoubleNeg:
        r = in[p.a];
        break;
      case Impl::Op::Disj:
        r = in[p.a] | in[p.b];
        break;
      case Impl::Op::NegDisj:
        r = in[p.a] & in[p.b];
        break;
      case Impl::Op::ExistsAny:
        for (std::uint32_t j = p.begin; j < p.end; ++j)
          if (in[im.pool[j]]) {
            r = 1;
            break;
          }
        break;
      case Impl::Op::NegExistsAll:
        r = 1;
        for (std::uint32_t j = p.begin; j < p.end; ++j)
          if (!in[im.pool[j]]) {
            r = 0;
            break;
          }
        break;
    }
    out[static_cast<std::size_t>(i)] = r;
  }
  return TruthSet(u, std::move(out));
}

TruthSet gamma_serial(const TruthSet& a, const BoundedStructure& m, const SentenceUniverse& u) {
  require_compatible(a, m, u);
  std::vector<char> out(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = theta(u.member(i), a, m, u) ? 1 : 0;
  return TruthSet(u, std::move(out));
}

LfpResult least_fixpoint(const SentenceUniverse& u, const BoundedStructure& m, bool parallel) {
  auto step = [&](const TruthSet& a) { return parallel ? gamma(a, m, u) : gamma_serial(a, m, u); };
  FixpointTrace trace;
  trace.entry.assign(u.size(), -1);

  TruthSet cur = step(TruthSet(u));
  for (std::size_t i = 0; i < u.size(); ++i)
    if (cur.contains_index(i)) trace.entry[i] = 0;

  std::size_t stage = 0;
  for (;;) {
    TruthSet next = step(cur);
    if (next == cur) break;
    ++stage;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (next.contains_index(i) && trace.entry[i] < 0)
        trace.entry[i] = static_cast<std::int64_t>(stage);
    cur = std::move(next);
  }
  trace.total_stages = stage;
  return {std::move(cur), std::move(trace)};
}

namespace {

bool match_term_rec(const Term& tpl, const Term& cand, std::map<VarIndex, Term>& sub,
                    const std::set<VarIndex>& bound) {
  if (tpl.kind() == Term::Kind::Var) {
    VarIndex v = tpl.var_index();
    if (!bound.count(v)) {
      auto it = sub.find(v);
      if (it != sub.end()) return it->second == cand;
      if (!cand.closed()) return false;
      sub.emplace(v, cand);
      return true;
    }
    return cand.kind() == Term::Kind::Var && cand.var_index() == v;
  }
  if (tpl.kind() != cand.kind()) return false;
  switch (tpl.kind()) {
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Succ:
      return match_term_rec(tpl.arg(), cand.arg(), sub, bound);
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return match_term_rec(tpl.lhs(), cand.lhs(), sub, bound) &&
             match_term_rec(tpl.rhs(), cand.rhs(), sub, bound);
    default:
      return false;
  }
}

bool match_form_rec(const Formula& tpl, const Formula& cand, std::map<VarIndex, Term>& sub,
                    std::set<VarIndex>& bound) {
  if (tpl.kind() != cand.kind()) return false;
  switch (tpl.kind()) {
    case Formula::Kind::Eq:
      return match_term_rec(tpl.lhs(), cand.lhs(), sub, bound) &&
             match_term_rec(tpl.rhs(), cand.rhs(), sub, bound);
    case Formula::Kind::Pred:
      return match_term_rec(tpl.pred_arg(), cand.pred_arg(), sub, bound);
    case Formula::Kind::Not:
      return match_form_rec(tpl.body(), cand.body(), sub, bound);
    case Formula::Kind::Or:
      return match_form_rec(tpl.left(), cand.left(), sub, bound) &&
             match_form_rec(tpl.right(), cand.right(), sub, bound);
    case Formula::Kind::Exists: {
      if (tpl.bound_var() != cand.bound_var()) return false;
      VarIndex v = tpl.bound_var();
      bool shadowed = bound.count(v) != 0;
      bound.insert(v);
      bool ok = match_form_rec(tpl.body(), cand.body(), sub, bound);
      if (!shadowed) bound.erase(v);
      return ok;
    }
  }
  return false;
}

// Alpha-invariant hash: bound occurrences hash by binder depth, binders drop
// their names. Used only to bucket candidates before exact alpha_eq checks.
std::size_t ah_mix(std::size_t h, std::size_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::size_t alpha_hash_term(const Term& t, std::map<VarIndex, std::size_t>& lvl) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return 1;
    case Term::Kind::Succ:
      return ah_mix(2, alpha_hash_term(t.arg(), lvl));
    case Term::Kind::Add:
      return ah_mix(ah_mix(3, alpha_hash_term(t.lhs(), lvl)), alpha_hash_term(t.rhs(), lvl));
    case Term::Kind::Mul:
      return ah_mix(ah_mix(4, alpha_hash_term(t.lhs(), lvl)), alpha_hash_term(t.rhs(), lvl));
    case Term::Kind::Var: {
      auto it = lvl.find(t.var_index());
      if (it != lvl.end()) return ah_mix(5, it->second);
      return ah_mix(6, static_cast<std::size_t>(t.var_index()));
    }
  }
  return 0;
}

std::size_t alpha_hash_form(const Formula& f, std::map<VarIndex, std::size_t>& lvl,
                            std::size_t depth) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return ah_mix(ah_mix(7, alpha_hash_term(f.lhs(), lvl)), alpha_hash_term(f.rhs(), lvl));
    case Formula::Kind::Pred:
      return ah_mix(8, alpha_hash_term(f.pred_arg(), lvl));
    case Formula::Kind::Not:
      return ah_mix(9, alpha_hash_form(f.body(), lvl, depth));
    case Formula::Kind::Or:
      return ah_mix(ah_mix(10, alpha_hash_form(f.left(), lvl, depth)),
                    alpha_hash_form(f.right(), lvl, depth));
    case Formula::Kind::Exists: {
      VarIndex v = f.bound_var();
      auto it = lvl.find(v);
      std::optional<std::size_t> saved =
          it != lvl.end() ? std::optional<std::size_t>(it->second) : std::nullopt;
      lvl[v] = depth;
      std::size_t h = ah_mix(11, alpha_hash_form(f.body(), lvl, depth + 1));
      if (saved)
        lvl[v] = *saved;
      else
        lvl.erase(v);
      return h;
    }
  }
  return 0;
}

std::size_t alpha_hash(const Formula& f) {
  std::map<VarIndex, std::size_t> lvl;
  return alpha_hash_form(f, lvl, 0);
}

}  // namespace

std::optional<std::map<VarIndex, Term>> match_template(const Formula& tmpl,
                                                       const Formula& candidate) {
  std::map<VarIndex, Term> sub;
  std::set<VarIndex> bound;
  if (!match_form_rec(tmpl, candidate, sub, bound)) return std::nullopt;
  return sub;
}

TruthSet tr_construction(const BoundedStructure& m, const std::vector<Formula>& templates,
                         const SentenceUniverse& u) {
  for (const Formula& t : templates)
    if (t.has_pred()) throw Error("templates must be predicate-free: " + print_formula(t));

  TruthSet out(u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula& f = u.member(i);
    if (f.has_pred()) continue;
    for (const Formula& tpl : templates) {
      auto sub = match_template(tpl, f);
      if (!sub) continue;
      NatAssignment sigma;
      for (const auto& [v, t] : *sub) sigma.emplace(v, eval_term(t));
      if (eval_classical(tpl, m, sigma)) {
        out.insert_index(i);
        break;
      }
    }
  }

  // Close under alpha-equivalence inside the universe: bucket by an
  // alpha-invariant hash, split buckets into classes by exact alpha_eq, then
  // include every class that meets the instance set.
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> buckets;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u.member(i).has_pred())
      buckets[alpha_hash(u.member(i))].push_back(static_cast<std::uint32_t>(i));

  for (auto& [h, idxs] : buckets) {
    if (idxs.size() < 2) continue;
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t idx : idxs) {
      bool placed = false;
      for (auto& cls : classes)
        if (alpha_eq(u.member(idx), u.member(cls.front()))) {
          cls.push_back(idx);
          placed = true;
          break;
        }
      if (!placed) classes.push_back({idx});
    }
    for (const auto& cls : classes) {
      bool hit = false;
      for (std::uint32_t idx : cls)
        if (out.contains_index(idx)) {
          hit = true;
          break;
        }
      if (hit)
        for (std::uint32_t idx : cls) out.insert_index(idx);
    }
  }
  return out;
}

}  // namespace truthlab

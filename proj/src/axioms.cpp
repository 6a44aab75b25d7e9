#include "truthlab/axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "truthlab/coding.hpp"
#include "truthlab/parser.hpp"

namespace truthlab {

namespace {

Formula instance_at(const Formula& ex, std::uint64_t x) {
  return subst_term(ex.body(), ex.bound_var(), numeral(x));
}

void require_audit_inputs(const BoundedStructure& m, const TruthSet& a,
                          const SentenceUniverse& u) {
  if (!a.universe().same_universe(u))
    throw NotInUniverse("truth set belongs to a different universe");
  if (u.structure().n_bound != m.n_bound)
    throw Error("structure domain bound differs from the universe's");
}

std::string bic(bool lhs, bool rhs) {
  return std::string("T=") + (lhs ? "true" : "false") + " rhs=" + (rhs ? "true" : "false");
}

// One audited biconditional per subject.
struct ClauseScan {
  ClauseResult* cr;

  void settle(const Formula& subject, bool lhs, bool rhs) const {
    ++cr->checked;
    if (lhs != rhs) cr->violations.push_back({subject, bic(lhs, rhs)});
  }
};

// ---- regularity (clause 5) ----------------------------------------------

std::size_t skel_mix(std::size_t h, std::size_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

constexpr std::size_t kWildcard = 0xc105ed;

// Structural hash with every maximal closed subterm replaced by a wildcard;
// anti-unifiable sentences agree on it.
std::size_t skel_term(const Term& t) {
  if (t.closed()) return kWildcard;
  switch (t.kind()) {
    case Term::Kind::Var:
      return skel_mix(21, static_cast<std::size_t>(t.var_index()));
    case Term::Kind::Succ:
      return skel_mix(22, skel_term(t.arg()));
    case Term::Kind::Add:
      return skel_mix(skel_mix(23, skel_term(t.lhs())), skel_term(t.rhs()));
    case Term::Kind::Mul:
      return skel_mix(skel_mix(24, skel_term(t.lhs())), skel_term(t.rhs()));
    case Term::Kind::Zero:
      break;  // closed, unreachable
  }
  return 0;
}

std::size_t skel_form(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return skel_mix(skel_mix(25, skel_term(f.lhs())), skel_term(f.rhs()));
    case Formula::Kind::Pred:
      return skel_mix(26, skel_term(f.pred_arg()));
    case Formula::Kind::Not:
      return skel_mix(27, skel_form(f.body()));
    case Formula::Kind::Or:
      return skel_mix(skel_mix(28, skel_form(f.left())), skel_form(f.right()));
    case Formula::Kind::Exists:
      return skel_mix(skel_mix(29, static_cast<std::size_t>(f.bound_var())),
                      skel_form(f.body()));
  }
  return 0;
}

// Lockstep anti-unification: positions closed on both sides may differ and
// become holes, everything else must match exactly. A pair of sentences
// anti-unifies iff both are term instances of one template, so pointwise
// equal hole values reduce to iterated single-variable regularity.
bool anti_unify_term(const Term& x, const Term& y,
                     std::vector<std::pair<Term, Term>>& holes) {
  if (x.closed() && y.closed()) {
    if (x != y) holes.emplace_back(x, y);
    return true;
  }
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Term::Kind::Var:
      return x.var_index() == y.var_index();
    case Term::Kind::Succ:
      return anti_unify_term(x.arg(), y.arg(), holes);
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return anti_unify_term(x.lhs(), y.lhs(), holes) &&
             anti_unify_term(x.rhs(), y.rhs(), holes);
    case Term::Kind::Zero:
      return true;
  }
  return false;
}

bool anti_unify_form(const Formula& x, const Formula& y,
                     std::vector<std::pair<Term, Term>>& holes) {
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Formula::Kind::Eq:
      return anti_unify_term(x.lhs(), y.lhs(), holes) &&
             anti_unify_term(x.rhs(), y.rhs(), holes);
    case Formula::Kind::Pred:
      return anti_unify_term(x.pred_arg(), y.pred_arg(), holes);
    case Formula::Kind::Not:
      return anti_unify_form(x.body(), y.body(), holes);
    case Formula::Kind::Or:
      return anti_unify_form(x.left(), y.left(), holes) &&
             anti_unify_form(x.right(), y.right(), holes);
    case Formula::Kind::Exists:
      return x.bound_var() == y.bound_var() &&
             anti_unify_form(x.body(), y.body(), holes);
  }
  return false;
}

ClauseResult regularity_clause(const TruthSet& a, const SentenceUniverse& u,
                               const char* name) {
  ClauseResult cr{name};
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> by_skel;
  for (std::size_t i = 0; i < u.size(); ++i)
    by_skel[skel_form(u.member(i))].push_back(static_cast<std::uint32_t>(i));

  std::vector<std::vector<std::uint32_t>> buckets;
  for (auto& [h, v] : by_skel)
    if (v.size() >= 2) buckets.push_back(std::move(v));
  std::sort(buckets.begin(), buckets.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::size_t dropped = 0;
  for (const auto& bkt : buckets)
    for (std::size_t i = 0; i < bkt.size(); ++i)
      for (std::size_t j = i + 1; j < bkt.size(); ++j) {
        if (pairs.size() >= kAuditPairCap) {
          ++dropped;
          continue;
        }
        pairs.emplace_back(bkt[i], bkt[j]);
      }

  // -1 not a regularity instance, 0 agrees, 1 violation. Slots are merged in
  // index order, so the report is deterministic under parallel evaluation.
  std::vector<signed char> res(pairs.size(), -1);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k) {
    auto [i, j] = pairs[static_cast<std::size_t>(k)];
    std::vector<std::pair<Term, Term>> holes;
    if (!anti_unify_form(u.member(i), u.member(j), holes)) continue;
    bool applicable = true;
    for (const auto& [s, t] : holes)
      if (eval_term(s) != eval_term(t)) {
        applicable = false;
        break;
      }
    if (!applicable) continue;
    res[static_cast<std::size_t>(k)] =
        a.contains_index(i) == a.contains_index(j) ? 0 : 1;
  }

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (res[k] < 0) continue;
    ++cr.checked;
    if (res[k] == 1)
      cr.violations.push_back({u.member(pairs[k].first),
                               "disagrees with " + print_formula(u.member(pairs[k].second)) +
                                   " at equal term values"});
  }
  cr.skipped += dropped;
  return cr;
}

}  // namespace

bool AuditReport::pass() const {
  for (const auto& c : clauses)
    if (!c.pass()) return false;
  return true;
}

std::size_t AuditReport::violation_count() const {
  std::size_t n = 0;
  for (const auto& c : clauses) n += c.violations.size();
  return n;
}

AuditReport check_pt_minus(const BoundedStructure& m, const TruthSet& a,
                           const SentenceUniverse& u) {
  require_audit_inputs(m, a, u);
  AuditReport rep{"PT-", {}};
  auto& cl = rep.clauses;
  cl.assign({ClauseResult{"1a"}, ClauseResult{"1b"}, ClauseResult{"2a"},
             ClauseResult{"2b"}, ClauseResult{"3a"}, ClauseResult{"3b"},
             ClauseResult{"4"}, ClauseResult{"5"}, ClauseResult{"p+"},
             ClauseResult{"p-"}});
  ClauseScan s1a{&cl[0]}, s1b{&cl[1]}, s2a{&cl[2]}, s2b{&cl[3]}, s3a{&cl[4]},
      s3b{&cl[5]}, s4{&cl[6]}, spp{&cl[8]}, spn{&cl[9]};

  const std::uint64_t n = m.n_bound;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula f = u.member(i);
    const bool t = a.contains_index(i);
    switch (f.kind()) {
      case Formula::Kind::Eq:
        s1a.settle(f, t, eval_term(f.lhs()) == eval_term(f.rhs()));
        break;
      case Formula::Kind::Pred:
        spp.settle(f, t, m.p_positive.count(eval_term(f.pred_arg())) != 0);
        break;
      case Formula::Kind::Or:
        s2a.settle(f, t, a.contains(f.left()) || a.contains(f.right()));
        break;
      case Formula::Kind::Exists: {
        bool any = false;
        for (std::uint64_t x = 0; x <= n && !any; ++x)
          any = a.contains(instance_at(f, x));
        s3a.settle(f, t, any);
        break;
      }
      case Formula::Kind::Not: {
        const Formula g = f.body();
        switch (g.kind()) {
          case Formula::Kind::Eq:
            s1b.settle(f, t, eval_term(g.lhs()) != eval_term(g.rhs()));
            break;
          case Formula::Kind::Pred:
            spn.settle(f, t, m.p_negative.count(eval_term(g.pred_arg())) != 0);
            break;
          case Formula::Kind::Or:
            s2b.settle(f, t, a.contains(neg(g.left())) && a.contains(neg(g.right())));
            break;
          case Formula::Kind::Exists: {
            bool all = true;
            for (std::uint64_t x = 0; x <= n && all; ++x)
              all = a.contains(neg(instance_at(g, x)));
            s3b.settle(f, t, all);
            break;
          }
          case Formula::Kind::Not:
            s4.settle(f, t, a.contains(g.body()));
            break;
        }
        break;
      }
    }
  }
  cl[7] = regularity_clause(a, u, "5");
  return rep;
}

AuditReport check_wpt_minus(const BoundedStructure& m, const TruthSet& a,
                            const SentenceUniverse& u) {
  require_audit_inputs(m, a, u);
  AuditReport rep{"WPT-", {}};
  auto& cl = rep.clauses;
  cl.assign({ClauseResult{"1a"}, ClauseResult{"1b"}, ClauseResult{"2a"},
             ClauseResult{"2b"}, ClauseResult{"3a"}, ClauseResult{"3b"},
             ClauseResult{"4"}, ClauseResult{"5"}, ClauseResult{"p+"},
             ClauseResult{"p-"}, ClauseResult{"d-and"}, ClauseResult{"d-neg-and"},
             ClauseResult{"d-all"}, ClauseResult{"d-neg-all"}});
  ClauseScan s1a{&cl[0]}, s1b{&cl[1]}, s2a{&cl[2]}, s2b{&cl[3]}, s3a{&cl[4]},
      s3b{&cl[5]}, s4{&cl[6]}, spp{&cl[8]}, spn{&cl[9]}, sda{&cl[10]},
      sdna{&cl[11]}, sdl{&cl[12]}, sdnl{&cl[13]};

  const std::uint64_t n = m.n_bound;
  auto tot = [&](const Formula& g) { return a.contains(g) || a.contains(neg(g)); };
  // tot consults g and ~g; both must be members for the instance to count.
  auto tot_ref = [&](const Formula& g) { return u.contains(g) && u.contains(neg(g)); };

  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula f = u.member(i);
    const bool t = a.contains_index(i);
    switch (f.kind()) {
      case Formula::Kind::Eq:
        s1a.settle(f, t, eval_term(f.lhs()) == eval_term(f.rhs()));
        break;
      case Formula::Kind::Pred:
        spp.settle(f, t, m.p_positive.count(eval_term(f.pred_arg())) != 0);
        break;
      case Formula::Kind::Or: {
        if (!tot_ref(f.left()) || !tot_ref(f.right())) {
          ++cl[2].skipped;
          break;
        }
        s2a.settle(f, t,
                   tot(f.left()) && tot(f.right()) &&
                       (a.contains(f.left()) || a.contains(f.right())));
        break;
      }
      case Formula::Kind::Exists: {
        bool refs = true, all_tot = true, any = false;
        for (std::uint64_t x = 0; x <= n && refs; ++x) {
          const Formula inst = instance_at(f, x);
          refs = tot_ref(inst);
          if (!refs) break;
          all_tot = all_tot && tot(inst);
          any = any || a.contains(inst);
        }
        if (!refs) {
          ++cl[4].skipped;
          break;
        }
        s3a.settle(f, t, all_tot && any);
        break;
      }
      case Formula::Kind::Not: {
        const Formula g = f.body();
        switch (g.kind()) {
          case Formula::Kind::Eq:
            s1b.settle(f, t, eval_term(g.lhs()) != eval_term(g.rhs()));
            break;
          case Formula::Kind::Pred:
            spn.settle(f, t, m.p_negative.count(eval_term(g.pred_arg())) != 0);
            break;
          case Formula::Kind::Or:
            s2b.settle(f, t, a.contains(neg(g.left())) && a.contains(neg(g.right())));
            break;
          case Formula::Kind::Exists: {
            bool all = true;
            for (std::uint64_t x = 0; x <= n && all; ++x)
              all = a.contains(neg(instance_at(g, x)));
            s3b.settle(f, t, all);
            break;
          }
          case Formula::Kind::Not:
            s4.settle(f, t, a.contains(g.body()));
            break;
        }
        break;
      }
    }

    // Derived clauses match on the defined-connective spellings; a member may
    // land in a primary clause above and a derived clause here.
    if (f.kind() == Formula::Kind::Not && f.body().kind() == Formula::Kind::Or &&
        f.body().left().kind() == Formula::Kind::Not &&
        f.body().right().kind() == Formula::Kind::Not) {
      // f = a0 & b0 spelled ~(~a0 | ~b0)
      const Formula a0 = f.body().left().body();
      const Formula b0 = f.body().right().body();
      if (u.contains(a0) && u.contains(b0))
        sda.settle(f, t, a.contains(a0) && a.contains(b0));
      else
        ++cl[10].skipped;
    }
    if (f.kind() == Formula::Kind::Not && f.body().kind() == Formula::Kind::Not &&
        f.body().body().kind() == Formula::Kind::Or &&
        f.body().body().left().kind() == Formula::Kind::Not &&
        f.body().body().right().kind() == Formula::Kind::Not) {
      // f = ~(a0 & b0) spelled ~~(~a0 | ~b0)
      const Formula na = f.body().body().left();
      const Formula nb = f.body().body().right();
      const Formula a0 = na.body(), b0 = nb.body();
      if (tot_ref(a0) && tot_ref(b0))
        sdna.settle(f, t, tot(a0) && tot(b0) && (a.contains(na) || a.contains(nb)));
      else
        ++cl[11].skipped;
    }
    if (f.kind() == Formula::Kind::Not && f.body().kind() == Formula::Kind::Exists &&
        f.body().body().kind() == Formula::Kind::Not) {
      // f = Av psi spelled ~E v ~psi
      const Formula ex = f.body();
      bool refs = true, all = true;
      for (std::uint64_t x = 0; x <= n && refs; ++x) {
        const Formula ipsi = instance_at(ex, x).body();  // instance of psi
        refs = u.contains(ipsi);
        all = all && refs && a.contains(ipsi);
      }
      if (!refs)
        ++cl[12].skipped;
      else
        sdl.settle(f, t, all);
    }
    if (f.kind() == Formula::Kind::Not && f.body().kind() == Formula::Kind::Not &&
        f.body().body().kind() == Formula::Kind::Exists &&
        f.body().body().body().kind() == Formula::Kind::Not) {
      // f = ~Av psi spelled ~~E v ~psi
      const Formula ex = f.body().body();
      bool refs = true, all_tot = true, any_neg = false;
      for (std::uint64_t x = 0; x <= n && refs; ++x) {
        const Formula inpsi = instance_at(ex, x);  // ~psi(x)
        const Formula ipsi = inpsi.body();
        refs = u.contains(ipsi) && u.contains(inpsi);
        if (!refs) break;
        all_tot = all_tot && (a.contains(ipsi) || a.contains(inpsi));
        any_neg = any_neg || a.contains(inpsi);
      }
      if (!refs)
        ++cl[13].skipped;
      else
        sdnl.settle(f, t, all_tot && any_neg);
    }
  }
  cl[7] = regularity_clause(a, u, "5");
  return rep;
}

AuditReport check_utb(const BoundedStructure& m, const TruthSet& a,
                      const std::vector<Formula>& templates,
                      const std::vector<Term>& terms) {
  const SentenceUniverse u = a.universe();
  if (u.structure().n_bound != m.n_bound)
    throw Error("structure domain bound differs from the universe's");
  for (const Term& t : terms)
    if (!t.closed()) throw Error("UTB substitution terms must be closed");

  AuditReport rep{"UTB-", {}};
  for (const Formula& tpl : templates) {
    if (tpl.has_pred())
      throw Error("UTB template mentions the oracle predicate: " + print_formula(tpl));
    ClauseResult cr{print_formula(tpl)};

    for (std::size_t i = 0; i < u.size(); ++i) {
      const Formula member = u.member(i);
      if (member.has_pred()) continue;
      auto sub = match_template(tpl, member);
      if (!sub) continue;
      NatAssignment sigma;
      for (const auto& [v, s] : *sub) sigma[v] = eval_term(s);
      const bool expected = eval_classical(tpl, m, sigma);
      const bool got = a.contains_index(i);
      ++cr.checked;
      if (got != expected)
        cr.violations.push_back(
            {member, std::string("classical=") + (expected ? "true" : "false") +
                         " T=" + (got ? "true" : "false")});
    }

    // Instances from explicit tuples that fall outside the universe are out of
    // the audit's reach; count them. In-universe ones were matched above.
    const auto& fv = tpl.free_vars();
    if (fv.empty()) {
      if (!u.contains(tpl)) ++cr.skipped;
    } else if (!terms.empty()) {
      unsigned __int128 total = 1;
      for (std::size_t k = 0; k < fv.size() && total <= kAuditPairCap; ++k)
        total *= terms.size();
      const std::size_t enumerated =
          total > kAuditPairCap ? kAuditPairCap : static_cast<std::size_t>(total);
      std::vector<std::size_t> idx(fv.size(), 0);
      for (std::size_t c = 0; c < enumerated; ++c) {
        Formula inst = tpl;
        for (std::size_t k = 0; k < fv.size(); ++k)
          inst = subst_term(inst, fv[k], terms[idx[k]]);
        if (!u.contains(inst)) ++cr.skipped;
        for (std::size_t k = fv.size(); k-- > 0;) {
          if (++idx[k] < terms.size()) break;
          idx[k] = 0;
        }
      }
      if (total > kAuditPairCap)
        cr.skipped += static_cast<std::size_t>(total - kAuditPairCap);
    }
    rep.clauses.push_back(std::move(cr));
  }
  return rep;
}

AuditReport check_neg(const BoundedStructure& m, const TruthSet& a,
                      const SentenceUniverse& u) {
  require_audit_inputs(m, a, u);
  AuditReport rep{"NEG", {ClauseResult{"neg"}}};
  ClauseResult& cr = rep.clauses[0];
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula f = u.member(i);
    auto ni = u.index_of(neg(f));
    if (!ni) {
      ++cr.skipped;
      continue;
    }
    ++cr.checked;
    const bool lhs = a.contains_index(*ni);
    const bool rhs = !a.contains_index(i);
    if (lhs != rhs)
      cr.violations.push_back({f, std::string("T(~phi)=") + (lhs ? "true" : "false") +
                                      " ~T(phi)=" + (rhs ? "true" : "false")});
  }
  return rep;
}

bool check_cc(const BoundedStructure& m, const TruthSet& a,
              const SentenceUniverse& u, const Formula& phi) {
  if (!u.contains(phi))
    throw NotInUniverse("CC subject is not a universe member: " + print_formula(phi));
  const bool t = a.contains(phi);
  switch (phi.kind()) {
    case Formula::Kind::Eq:
      return t == (eval_term(phi.lhs()) == eval_term(phi.rhs()));
    case Formula::Kind::Or:
      return t == (a.contains(phi.left()) || a.contains(phi.right()));
    case Formula::Kind::Not:
      return t == !a.contains(phi.body());
    case Formula::Kind::Exists: {
      bool any = false;
      for (std::uint64_t x = 0; x <= m.n_bound && !any; ++x)
        any = a.contains(instance_at(phi, x));
      return t == any;
    }
    case Formula::Kind::Pred:
      // No disjunct covers an oracle atom, and the regularity disjunct needs
      // exactly one free variable, which no member has.
      return false;
  }
  return false;
}

AuditReport cc_audit(const BoundedStructure& m, const TruthSet& a,
                     const SentenceUniverse& u) {
  require_audit_inputs(m, a, u);
  AuditReport rep{"CC", {ClauseResult{"cc"}}};
  ClauseResult& cr = rep.clauses[0];
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Formula f = u.member(i);
    if (f.kind() == Formula::Kind::Not && !u.contains(f.body())) {
      ++cr.skipped;  // negation disjunct would consult a non-member
      continue;
    }
    ++cr.checked;
    if (!check_cc(m, a, u, f))
      cr.violations.push_back({f, "no correctness disjunct holds"});
  }
  return rep;
}

bool check_gc(const BoundedStructure& m, const TruthSet& a,
              const SentenceUniverse& u, const Formula& phi) {
  const Formula cl = universal_closure(phi);
  const auto& fv = phi.free_vars();

  unsigned __int128 total = 1;
  for (std::size_t k = 0; k < fv.size(); ++k) {
    total *= m.n_bound + 1;
    if (total > kAuditPairCap)
      throw CapExceeded("GC instance grid exceeds the audit cap");
  }

  std::vector<Formula> insts;
  insts.reserve(static_cast<std::size_t>(total));
  std::vector<std::uint64_t> idx(fv.size(), 0);
  for (unsigned __int128 c = 0; c < total; ++c) {
    Assignment sigma;
    for (std::size_t k = 0; k < fv.size(); ++k) sigma[fv[k]] = idx[k];
    insts.push_back(apply_assignment(phi, sigma));
    for (std::size_t k = fv.size(); k-- > 0;) {
      if (++idx[k] <= m.n_bound) break;
      idx[k] = 0;
    }
  }

  std::string missing;
  if (!u.contains(cl)) missing += "\n  " + print_formula(cl);
  for (const Formula& inst : insts)
    if (!u.contains(inst)) missing += "\n  " + print_formula(inst);
  if (!missing.empty())
    throw NotInUniverse("GC consults sentences outside the universe:" + missing);

  const bool lhs = a.contains(cl);
  bool rhs = true;
  for (const Formula& inst : insts) rhs = rhs && a.contains(inst);
  return lhs == rhs;
}

AuditReport gc_audit(const BoundedStructure& m, const TruthSet& a,
                     const SentenceUniverse& u, const std::vector<Formula>& phis) {
  require_audit_inputs(m, a, u);
  AuditReport rep{"GC", {ClauseResult{"gc"}}};
  ClauseResult& cr = rep.clauses[0];
  for (const Formula& phi : phis) {
    try {
      const bool ok = check_gc(m, a, u, phi);
      ++cr.checked;
      if (!ok)
        cr.violations.push_back(
            {phi, "T(ucl) and instance-wise T disagree"});
    } catch (const NotInUniverse&) {
      ++cr.skipped;
    } catch (const CapExceeded&) {
      ++cr.skipped;
    }
  }
  return rep;
}

AuditReport check_truth_of_induction(const BoundedStructure& m, const TruthSet& a,
                                     const SentenceUniverse& u,
                                     const std::vector<Formula>& phis) {
  require_audit_inputs(m, a, u);
  AuditReport rep{"TIND", {ClauseResult{"t-ind"}}};
  ClauseResult& cr = rep.clauses[0];
  for (const Formula& phi : phis) {
    if (phi.free_vars().size() > 1)
      throw TooManyFreeVars("T(IND) audit needs at most one free variable: " +
                            print_formula(phi));
    const VarIndex v = phi.free_vars().empty() ? 0 : phi.free_vars()[0];
    const Formula ind = ind_instance(phi, v);
    if (!u.contains(ind)) {
      ++cr.skipped;
      continue;
    }
    ++cr.checked;
    if (!a.contains(ind))
      cr.violations.push_back({phi, "induction instance not in A"});
  }
  return rep;
}

AuditReport check_int(const BoundedStructure& m, const TruthSet& a,
                      const SentenceUniverse& u, const std::vector<Formula>& phis,
                      bool tot_only) {
  require_audit_inputs(m, a, u);
  AuditReport rep{tot_only ? "INT_TOT" : "INT",
                  {ClauseResult{tot_only ? "int-tot" : "int"}}};
  ClauseResult& cr = rep.clauses[0];
  const std::uint64_t n = m.n_bound;
  for (const Formula& phi : phis) {
    if (phi.free_vars().size() > 1)
      throw TooManyFreeVars("internal induction audit needs at most one free variable: " +
                            print_formula(phi));

    std::vector<Formula> insts;
    insts.reserve(n + 1);
    if (phi.free_vars().empty()) {
      for (std::uint64_t x = 0; x <= n; ++x) insts.push_back(phi);
    } else {
      const VarIndex v = phi.free_vars()[0];
      for (std::uint64_t x = 0; x <= n; ++x)
        insts.push_back(subst_term(phi, v, numeral(x)));
    }

    bool refs = true;
    for (const Formula& inst : insts) refs = refs && u.contains(inst);
    if (!refs) {
      ++cr.skipped;
      continue;
    }
    if (tot_only) {
      bool total = true;
      for (const Formula& inst : insts)
        total = total && (a.contains(inst) || a.contains(neg(inst)));
      if (!total) {
        ++cr.skipped;
        continue;
      }
    }

    const bool base = a.contains(insts[0]);
    bool prog = true;
    for (std::uint64_t x = 0; x < n && prog; ++x)
      prog = !a.contains(insts[x]) || a.contains(insts[x + 1]);
    ++cr.checked;
    if (base && prog) {
      for (std::uint64_t x = 0; x <= n; ++x)
        if (!a.contains(insts[x])) {
          cr.violations.push_back({phi, "premise holds but T fails at x=" + std::to_string(x)});
          break;
        }
    }
  }
  return rep;
}

}  // namespace truthlab

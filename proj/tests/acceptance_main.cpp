// Acceptance harness: ten numbered criteria, one [PASS]/[FAIL] line each,
// exit status 0 exactly when every criterion passes. All randomness is
// seeded, so a failure reproduces bit-for-bit.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "truthlab/axioms.hpp"
#include "truthlab/coding.hpp"
#include "truthlab/constructions.hpp"
#include "truthlab/errors.hpp"
#include "truthlab/fixpoint.hpp"
#include "truthlab/parser.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

using namespace truthlab;
namespace tu = truthlab::testutil;

namespace {

constexpr Scheme kSK = Scheme::StrongKleene;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << "s";
  return os.str();
}

// A universe together with the structure it was closed over and its least
// fixpoint; criteria 1, 2 and 8 share these.
struct UniverseCase {
  SentenceUniverse u;
  BoundedStructure m;
  TruthSet fix;
};

// A template-driven truth-set construction; criteria 6 and 9 share these.
struct TemplateCase {
  SentenceUniverse u;
  BoundedStructure m;
  std::vector<Formula> templates;
  TruthSet tr;
  TruthSet fix;
};

std::vector<Formula> p_free_members_of(const SentenceUniverse& u) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u.member(i).has_pred()) out.push_back(u.member(i));
  return out;
}

BoundedStructure random_structure(tu::Rng& rng, std::uint64_t n, bool with_p) {
  std::set<Nat> pos, neg;
  if (with_p)
    for (std::uint64_t x = 0; x <= n; ++x) switch (tu::pick(rng, 3)) {
        case 0: pos.insert(Nat(x)); break;
        case 1: neg.insert(Nat(x)); break;
        default: break;
      }
  return BoundedStructure(n, pos, neg);
}

// --- criterion 1: fixpoint membership coincides with strong Kleene truth ---

Outcome criterion1(std::vector<UniverseCase>& cases) {
  const auto t0 = std::chrono::steady_clock::now();
  tu::Rng rng(101);
  std::size_t members = 0, mismatches = 0, rejected = 0;

  while (cases.size() < 20 && rejected < 1000) {
    const std::uint64_t n = tu::pick(rng, 7);        // N in 0..6
    const bool with_p = cases.size() % 2 == 0;       // half the universes partial
    const BoundedStructure m = random_structure(rng, n, with_p);
    const tu::GenOpts o{.max_depth = 2 + tu::pick(rng, 3),  // depth 2..4
                        .term_depth = 1,
                        .var_span = 2,
                        .allow_pred = with_p};
    std::vector<Formula> seeds;
    const std::size_t k = 1 + tu::pick(rng, 15);     // 1..15 seed sentences
    for (std::size_t i = 0; i < k; ++i) seeds.push_back(tu::random_sentence(rng, o));
    try {
      SentenceUniverse u = build_universe(seeds, m, 8000);
      TruthSet fix = least_fixpoint(u, m).fixpoint;
      cases.push_back({u, m, std::move(fix)});
    } catch (const UniverseTooLarge&) {
      ++rejected;  // closure blew the tractability cap; draw a fresh seed set
    }
  }

  for (const auto& c : cases)
    for (std::size_t i = 0; i < c.u.size(); ++i) {
      ++members;
      const bool in_fix = c.fix.contains_index(i);
      const bool sk_true = eval3(c.u.member(i), c.m, kSK) == TruthValue3::True;
      if (in_fix != sk_true) ++mismatches;
    }

  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << cases.size() << " universes, " << members << " members, " << mismatches
    << " mismatches; " << secs(dt) << " (limit 30s)";
  return {cases.size() >= 20 && mismatches == 0 && dt < 30.0, d.str()};
}

// --- criterion 2: the compositional positive-truth audit on every fixpoint ---

Outcome criterion2(const std::vector<UniverseCase>& cases) {
  std::size_t violations = 0, clauses = 0;
  for (const auto& c : cases) {
    const AuditReport rep = check_pt_minus(c.m, c.fix, c.u);
    for (const auto& cl : rep.clauses) {
      ++clauses;
      violations += cl.violations.size();
    }
  }
  std::ostringstream d;
  d << cases.size() << " fixpoints, " << clauses << " clause sweeps, " << violations
    << " violations";
  return {!cases.empty() && violations == 0, d.str()};
}

// --- criterion 3: the stopping disjunction reports the beta at the first
// --- true alpha, over exhaustive and random decidedness patterns ---

Outcome criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr TruthValue3 kVals[3] = {TruthValue3::False, TruthValue3::Undefined,
                                    TruthValue3::True};
  std::size_t patterns = 0, applicable = 0, failures = 0;

  // alphas j -> P(j), betas j -> P(c+1+j); a pattern decides each atom.
  const auto run_pattern = [&](std::uint64_t c, const std::vector<int>& pat,
                               const std::vector<Formula>& alphas,
                               const std::vector<Formula>& betas, const Formula& dis,
                               const Formula& ndis) {
    ++patterns;
    std::set<Nat> pos, neg;
    for (std::size_t k = 0; k < pat.size(); ++k) {
      if (kVals[pat[k]] == TruthValue3::True) pos.insert(Nat(k));
      if (kVals[pat[k]] == TruthValue3::False) neg.insert(Nat(k));
    }
    const BoundedStructure m(2 * c + 2, pos, neg);

    // Hypothesis: a least true alpha with all earlier alphas false, and all
    // betas up to that index decided.
    std::optional<std::size_t> j0;
    for (std::size_t j = 0; j <= c; ++j) {
      if (kVals[pat[j]] == TruthValue3::True) {
        j0 = j;
        break;
      }
      if (kVals[pat[j]] != TruthValue3::False) break;
    }
    bool hyp = j0.has_value();
    if (hyp)
      for (std::size_t k = 0; k <= *j0; ++k)
        if (kVals[pat[c + 1 + k]] == TruthValue3::Undefined) hyp = false;
    if (!hyp) return;

    ++applicable;
    const TruthValue3 want = kVals[pat[c + 1 + *j0]];
    bool ok = eval3(dis, m, kSK) == want && eval3(ndis, m, kSK) == tv3_not(want);
    const StoppingReport rep = check_stopping_semantics(alphas, betas, m, kSK);
    ok = ok && rep.applicable && rep.agrees && rep.stop_index.has_value() &&
         *rep.stop_index == *j0 && rep.disjunction_value == want &&
         rep.negation_value == tv3_not(want);
    if (!ok) ++failures;
  };

  const auto family_for = [](std::uint64_t c) {
    std::pair<std::vector<Formula>, std::vector<Formula>> fam;
    for (std::uint64_t j = 0; j <= c; ++j) {
      fam.first.push_back(pred(numeral(j)));
      fam.second.push_back(pred(numeral(c + 1 + j)));
    }
    return fam;
  };

  // Exhaustive sweep for c <= 4: 3^(2c+2) patterns each.
  for (std::uint64_t c = 0; c <= 4; ++c) {
    const auto [alphas, betas] = family_for(c);
    const Formula dis = stopping_disjunction(alphas, betas, 0);
    const Formula ndis = neg(dis);
    std::vector<int> pat(2 * c + 2, 0);
    while (true) {
      run_pattern(c, pat, alphas, betas, dis, ndis);
      std::size_t i = 0;
      while (i < pat.size() && pat[i] == 2) pat[i++] = 0;
      if (i == pat.size()) break;
      ++pat[i];
    }
  }

  // 200 random patterns with c <= 8.
  tu::Rng rng(103);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t c = tu::pick(rng, 9);
    const auto [alphas, betas] = family_for(c);
    const Formula dis = stopping_disjunction(alphas, betas, 0);
    const Formula ndis = neg(dis);
    std::vector<int> pat(2 * c + 2);
    for (auto& v : pat) v = static_cast<int>(tu::pick(rng, 3));
    run_pattern(c, pat, alphas, betas, dis, ndis);
  }

  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << patterns << " patterns, " << applicable << " meeting the hypothesis, "
    << failures << " failures; " << secs(dt) << " (limit 10s)";
  return {patterns == 66429 + 200 && applicable > 0 && failures == 0 && dt < 10.0,
          d.str()};
}

// --- criterion 4: substituting a total formula for P commutes with the
// --- fixpoint: truth of eta[xi] instances = classical truth with P := ext ---

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  tu::Rng rng(104);
  std::size_t pairs = 0, instances = 0, mismatches = 0, attempts = 0;

  while (pairs < 200 && attempts < 20000) {
    ++attempts;
    const std::uint64_t n = tu::pick(rng, 7);  // N in 0..6
    const BoundedStructure m = random_structure(rng, n, true);

    // xi: one free variable (v9), may consult P, must be total on the domain.
    const tu::GenOpts xo{.max_depth = 2, .term_depth = 1, .var_span = 2,
                         .allow_pred = true};
    const Formula xi = tu::random_formula_scoped(rng, xo, {9}, xo.max_depth);
    if (!is_total(xi, m, kSK)) continue;
    std::set<Nat> ext;
    for (std::uint64_t x = 0; x <= n; ++x) {
      Assignment sx;
      if (!xi.free_vars().empty()) sx[9] = x;
      if (eval3(xi, m, kSK, sx) == TruthValue3::True) ext.insert(Nat(x));
    }

    // eta: at most 3 logical nodes over P, made semirelational.
    const tu::GenOpts eo{.max_depth = 2, .term_depth = 1, .var_span = 2,
                         .allow_pred = true};
    const Formula eta = to_semirelational(tu::random_open_formula(rng, eo));

    Formula phi = eta;
    try {
      phi = subst_predicate(eta, xi);
    } catch (const CaptureError&) {
      continue;  // xi's binders clash with this eta; draw another pair
    }

    // All numeral instances over eta's free variables.
    const std::vector<VarIndex> fv = eta.free_vars();
    std::vector<Assignment> sigmas{Assignment{}};
    for (const VarIndex v : fv) {
      std::vector<Assignment> next;
      for (const Assignment& s : sigmas)
        for (std::uint64_t x = 0; x <= n; ++x) {
          Assignment t = s;
          t[v] = x;
          next.push_back(std::move(t));
        }
      sigmas = std::move(next);
    }

    // phi may have fewer free variables than eta (xi can ignore its
    // argument), so restrict each assignment to phi's own variables.
    const std::vector<VarIndex> pfv = phi.free_vars();
    std::vector<Formula> seeds;
    for (const Assignment& s : sigmas) {
      Assignment t;
      for (const VarIndex v : pfv) t[v] = s.at(v);
      seeds.push_back(apply_assignment(phi, t));
    }
    try {
      const SentenceUniverse u = build_universe(seeds, m, 30000);
      const TruthSet fix = least_fixpoint(u, m).fixpoint;
      for (std::size_t i = 0; i < sigmas.size(); ++i) {
        ++instances;
        const bool in_fix = fix.contains(seeds[i]);
        const bool classical = eval_classical_with_pred(eta, m, ext, sigmas[i]);
        if (in_fix != classical) ++mismatches;
      }
      ++pairs;
    } catch (const UniverseTooLarge&) {
      continue;
    }
  }

  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << pairs << " pairs, " << instances << " instances, " << mismatches
    << " mismatches; " << secs(dt) << " (limit 30s)";
  return {pairs == 200 && mismatches == 0 && dt < 30.0, d.str()};
}

// --- criterion 5: the truth-definition formula tau agrees with classical
// --- truth of the enumerated formula at coded instances ---

Outcome criterion5() {
  std::size_t checks = 0, failures = 0;
  for (std::uint64_t b = 0; b <= 8; ++b)
    for (std::uint64_t c = 0; c <= 8; ++c) {
      const TauFamily tf = tau_family(b, c);
      for (std::uint64_t i = 0; i <= 5; ++i) {
        const Formula phi = enumerate_formula(Nat(i));
        if (!phi.free_vars().empty() || phi.has_pred()) {
          ++failures;  // the enumeration at these indices yields sentences
          continue;
        }
        const NatAssignment sigma{{tf.var_phi, encode(phi)},
                                  {tf.var_t, seq_code({})}};
        for (const std::uint64_t n : {0, 3, 6}) {
          const BoundedStructure m(n, {}, {});
          ++checks;
          if (eval_classical(tf.tau, m, sigma) != eval_classical(phi, m))
            ++failures;
        }
      }
    }
  std::ostringstream d;
  d << checks << " coded instances across b,c <= 8 and N in {0,3,6}, " << failures
    << " disagreements";
  return {checks == 81 * 6 * 3 && failures == 0, d.str()};
}

// --- criterion 6: the template truth-set construction satisfies the weak
// --- Kleene axioms and internal induction on every test universe ---

Outcome criterion6(std::vector<TemplateCase>& tcases) {
  tu::Rng rng(106);
  std::size_t wpt_violations = 0, int_checks = 0, int_violated = 0, attempts = 0;

  while (tcases.size() < 5 && attempts < 200) {
    ++attempts;
    const std::uint64_t n = 2 + tcases.size();  // N in 2..6
    const BoundedStructure m(n, {}, {});
    const tu::GenOpts o{.max_depth = 2, .term_depth = 1, .var_span = 2,
                        .allow_pred = false};

    // Open P-free templates (depth <= 3, at most two free variables) and the
    // negation-closed set of all their numeral instances as seeds.
    std::vector<Formula> open_templates;
    for (int t = 0; t < 4; ++t) open_templates.push_back(tu::random_open_formula(rng, o));

    std::vector<Formula> seeds;
    for (const Formula& tmpl : open_templates) {
      std::vector<Assignment> sigmas{Assignment{}};
      for (const VarIndex v : tmpl.free_vars()) {
        std::vector<Assignment> next;
        for (const Assignment& s : sigmas)
          for (std::uint64_t x = 0; x <= n; ++x) {
            Assignment t2 = s;
            t2[v] = x;
            next.push_back(std::move(t2));
          }
        sigmas = std::move(next);
      }
      for (const Assignment& s : sigmas) seeds.push_back(apply_assignment(tmpl, s));
    }
    const std::size_t closed_count = seeds.size();
    for (std::size_t i = 0; i < closed_count; ++i) seeds.push_back(neg(seeds[i]));

    try {
      const SentenceUniverse u = build_universe(seeds, m, 30000);
      std::vector<Formula> templates = p_free_members_of(u);
      templates.insert(templates.end(), open_templates.begin(), open_templates.end());
      TruthSet tr = tr_construction(m, templates, u);
      TruthSet fix = least_fixpoint(u, m).fixpoint;
      tcases.push_back({u, m, std::move(templates), std::move(tr), std::move(fix)});
    } catch (const UniverseTooLarge&) {
      continue;
    }
  }

  for (const auto& tc : tcases) {
    const AuditReport rep = check_wpt_minus(tc.m, tc.tr, tc.u);
    for (const auto& cl : rep.clauses) wpt_violations += cl.violations.size();
    for (const Formula& tmpl : tc.templates) {
      if (tmpl.free_vars().size() > 1) continue;
      ++int_checks;
      if (internal_induction_check(tmpl, tc.m, kSK).status == IntStatus::Violated)
        ++int_violated;
    }
  }

  std::ostringstream d;
  d << tcases.size() << " universes, " << wpt_violations
    << " weak-clause violations, " << int_violated << " induction violations in "
    << int_checks << " checks";
  return {tcases.size() == 5 && wpt_violations == 0 && int_violated == 0, d.str()};
}

// --- criterion 7: the strong/weak Kleene separation witness and the two
// --- axiom families it breaks ---

Outcome criterion7() {
  const BoundedStructure m(2, {}, {});
  const Formula t_atom = eq(zero(), zero());
  const Formula p_atom = pred(numeral(2));
  const Formula witness = disj(t_atom, p_atom);

  const bool sk_true = eval3(witness, m, kSK) == TruthValue3::True;
  const bool wk_undef =
      eval3(witness, m, Scheme::WeakKleene) == TruthValue3::Undefined;

  const SentenceUniverse u = build_universe({witness, neg(t_atom), neg(p_atom)}, m);
  const TruthSet fix = least_fixpoint(u, m).fixpoint;

  std::size_t wpt_or_violations = 0;
  for (const auto& cl : check_wpt_minus(m, fix, u).clauses)
    if (cl.clause == "2a") wpt_or_violations = cl.violations.size();
  const bool neg_fails = !check_neg(m, fix, u).pass();

  std::ostringstream d;
  d << "witness " << print_formula(witness) << ": SK " << (sk_true ? "True" : "?")
    << ", WK " << (wk_undef ? "Undefined" : "?") << ", weak disjunction clause "
    << wpt_or_violations << " violation(s), negation audit "
    << (neg_fails ? "fails" : "holds");
  return {sk_true && wk_undef && fix.contains(witness) && wpt_or_violations > 0 &&
              neg_fails,
          d.str()};
}

// --- criterion 8: the one-step operator is monotone, fixpoints are
// --- consistent and actually fixed ---

Outcome criterion8(const std::vector<UniverseCase>& cases) {
  tu::Rng rng(108);
  std::size_t pair_failures = 0, inconsistencies = 0, unfixed = 0, pairs = 0;

  for (const auto& c : cases) {
    for (int t = 0; t < 100; ++t) {
      TruthSet b(c.u);
      for (std::size_t i = 0; i < c.u.size(); ++i)
        if (tu::pick(rng, 2) == 0) b.insert_index(i);
      TruthSet a(c.u);
      for (std::size_t i = 0; i < c.u.size(); ++i)
        if (b.contains_index(i) && tu::pick(rng, 2) == 0) a.insert_index(i);
      ++pairs;
      if (!gamma(a, c.m, c.u).subset_of(gamma(b, c.m, c.u))) ++pair_failures;
    }

    for (std::size_t i = 0; i < c.u.size(); ++i) {
      if (!c.fix.contains_index(i)) continue;
      const Formula n = neg(c.u.member(i));
      if (c.u.contains(n) && c.fix.contains(n)) ++inconsistencies;
    }

    const TruthSet g = gamma(c.fix, c.m, c.u);
    if (!(g.subset_of(c.fix) && c.fix.subset_of(g))) ++unfixed;
  }

  std::ostringstream d;
  d << pairs << " subset pairs (" << pair_failures << " monotonicity failures), "
    << inconsistencies << " inconsistent members, " << unfixed
    << " non-fixed fixpoints";
  return {!cases.empty() && pair_failures == 0 && inconsistencies == 0 && unfixed == 0,
          d.str()};
}

// --- criterion 9: the uniform disquotation audit on fixpoint truth and on
// --- the template construction ---

Outcome criterion9(const std::vector<TemplateCase>& tcases) {
  std::size_t audits = 0, failures = 0;
  for (const auto& tc : tcases) {
    std::vector<Term> terms;
    for (std::uint64_t x = 0; x <= tc.m.n_bound; ++x) terms.push_back(numeral(x));
    for (const TruthSet* a : {&tc.fix, &tc.tr}) {
      ++audits;
      if (!check_utb(tc.m, *a, tc.templates, terms).pass()) ++failures;
    }
  }
  std::ostringstream d;
  d << audits << " audits over " << tcases.size() << " universes, " << failures
    << " failures";
  return {!tcases.empty() && failures == 0, d.str()};
}

// --- criterion 10: coding round-trip and subterm monotonicity ---

Nat monotone_code(const Term& t, std::size_t& failures);
Nat monotone_code(const Formula& f, std::size_t& failures);

Nat monotone_code(const Term& t, std::size_t& failures) {
  const Nat c = encode(t);
  const auto child = [&](const Term& s) {
    if (monotone_code(s, failures) >= c) ++failures;
  };
  switch (t.kind()) {
    case Term::Kind::Succ: child(t.arg()); break;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      child(t.lhs());
      child(t.rhs());
      break;
    default: break;
  }
  return c;
}

Nat monotone_code(const Formula& f, std::size_t& failures) {
  const Nat c = encode(f);
  const auto term_child = [&](const Term& s) {
    if (monotone_code(s, failures) >= c) ++failures;
  };
  const auto child = [&](const Formula& s) {
    if (monotone_code(s, failures) >= c) ++failures;
  };
  switch (f.kind()) {
    case Formula::Kind::Eq:
      term_child(f.lhs());
      term_child(f.rhs());
      break;
    case Formula::Kind::Pred: term_child(f.pred_arg()); break;
    case Formula::Kind::Not: child(f.body()); break;
    case Formula::Kind::Or:
      child(f.left());
      child(f.right());
      break;
    case Formula::Kind::Exists: child(f.body()); break;
  }
  return c;
}

Outcome criterion10() {
  const auto t0 = std::chrono::steady_clock::now();
  tu::Rng rng(110);
  const tu::GenOpts o{.max_depth = 3, .term_depth = 2, .var_span = 3,
                      .allow_pred = true};
  const std::vector<VarIndex> scope{0, 1, 2};
  std::size_t round_trip_failures = 0, monotone_failures = 0;
  constexpr std::size_t kTrees = 100000;

  for (std::size_t k = 0; k < kTrees; ++k) {
    if (k % 5 < 3) {
      const Formula f = tu::random_open_formula(rng, o);
      const Decoded d = decode(encode(f));
      if (!std::holds_alternative<Formula>(d) || !(std::get<Formula>(d) == f))
        ++round_trip_failures;
      monotone_code(f, monotone_failures);
    } else {
      const Term t = tu::random_term(rng, scope, o.term_depth + 1);
      const Decoded d = decode(encode(t));
      if (!std::holds_alternative<Term>(d) || !(std::get<Term>(d) == t))
        ++round_trip_failures;
      monotone_code(t, monotone_failures);
    }
  }

  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << kTrees << " trees, " << round_trip_failures << " round-trip failures, "
    << monotone_failures << " monotonicity failures; " << secs(dt)
    << " (limit 10s)";
  return {round_trip_failures == 0 && monotone_failures == 0 && dt < 10.0, d.str()};
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {false, std::string("unhandled exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  std::vector<UniverseCase> cases;
  std::vector<TemplateCase> tcases;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fixpoint membership coincides with strong Kleene truth",
       [&] { return criterion1(cases); }},
      {"positive-truth clause audit on every fixpoint",
       [&] { return criterion2(cases); }},
      {"stopping disjunction reports the beta at the first true alpha",
       [] { return criterion3(); }},
      {"substitution into P commutes with fixpoint truth",
       [] { return criterion4(); }},
      {"truth-definition formula tau disquotes enumerated formulas",
       [] { return criterion5(); }},
      {"template truth set satisfies the weak clauses and internal induction",
       [&] { return criterion6(tcases); }},
      {"strong/weak separation witness breaks the weak and negation audits",
       [] { return criterion7(); }},
      {"one-step operator monotone; fixpoints consistent and fixed",
       [&] { return criterion8(cases); }},
      {"uniform disquotation audit on fixpoint and template truth",
       [&] { return criterion9(tcases); }},
      {"coding round-trip identity and subterm monotonicity",
       [] { return criterion10(); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome r = guarded(criteria[i].second);
    all = all && r.pass;
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " " << (i + 1) << ". "
              << criteria[i].first << " (" << r.detail << ")\n";
  }
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILURES above")
            << "\n";
  return all ? 0 : 1;
}

#include <doctest.h>

#include <set>

#include "test_util.hpp"
#include "truthlab/errors.hpp"
#include "truthlab/semantics.hpp"
#include "truthlab/syntax.hpp"

using namespace truthlab;
namespace tu = truthlab::testutil;

namespace {
const TruthValue3 T = TruthValue3::True;
const TruthValue3 F = TruthValue3::False;
const TruthValue3 U = TruthValue3::Undefined;
}  // namespace

TEST_CASE("term evaluation is exact beyond machine words") {
  Term t = numeral(1);
  for (int i = 0; i < 25; ++i) t = mul(numeral(10), t);
  Nat expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 10, 25);
  CHECK(eval_term(t) == expected);

  CHECK(eval_term(add(numeral(7), mul(numeral(6), numeral(8)))) == 55);
  CHECK(eval_term(var(3), Assignment{{3, 9}}) == 9);
  CHECK_THROWS_AS(eval_term(var(0)), UnassignedVariable);

  // NatAssignment carries exact big values.
  NatAssignment big{{0, Nat(1) << 70}};
  CHECK(eval_term(add(var(0), var(0)), big) == (Nat(1) << 71));
}

TEST_CASE("classical quantifiers range over the bounded domain") {
  const Formula e3 = exists(0, eq(var(0), numeral(3)));
  CHECK_FALSE(eval_classical(e3, BoundedStructure(2, {}, {})));
  CHECK(eval_classical(e3, BoundedStructure(3, {}, {})));

  const Formula all_sq = forall(0, eq(mul(var(0), var(0)), mul(var(0), var(0))));
  CHECK(eval_classical(all_sq, BoundedStructure(5, {}, {})));

  // Nested: every x in {0..N} has some y with y = x + 1 only if N is not the cap.
  const Formula succ_inside = forall(0, exists(1, eq(var(1), succ(var(0)))));
  CHECK_FALSE(eval_classical(succ_inside, BoundedStructure(4, {}, {})));
  const Formula pred_inside = forall(0, exists(1, eq(var(0), add(var(1), var(1)))));
  CHECK_FALSE(eval_classical(pred_inside, BoundedStructure(1, {}, {})));

  CHECK_THROWS_AS(eval_classical(pred(zero()), BoundedStructure(1, {}, {})),
                  OracleInClassical);
}

TEST_CASE("three-valued oracle atoms follow the partial extension") {
  const BoundedStructure m(2, {Nat(0)}, {Nat(1)});
  CHECK(eval3(pred(zero()), m, Scheme::StrongKleene) == T);
  CHECK(eval3(pred(numeral(1)), m, Scheme::StrongKleene) == F);
  CHECK(eval3(pred(numeral(2)), m, Scheme::StrongKleene) == U);
  CHECK(eval3(neg(pred(numeral(2))), m, Scheme::StrongKleene) == U);
  CHECK(eval3(neg(pred(zero())), m, Scheme::StrongKleene) == F);
}

TEST_CASE("strong and weak schemes differ exactly on recoverable gaps") {
  const BoundedStructure m(2, {Nat(0)}, {Nat(1)});
  const Formula pT = pred(zero()), pF = pred(numeral(1)), pU = pred(numeral(2));

  // Or: strong Kleene recovers from an undefined side, weak does not.
  CHECK(eval3(disj(pU, pT), m, Scheme::StrongKleene) == T);
  CHECK(eval3(disj(pU, pT), m, Scheme::WeakKleene) == U);
  CHECK(eval3(disj(pU, pF), m, Scheme::StrongKleene) == U);
  CHECK(eval3(disj(pU, pF), m, Scheme::WeakKleene) == U);
  CHECK(eval3(disj(pF, pF), m, Scheme::StrongKleene) == F);

  // Conjunction (derived): a false side settles strong Kleene.
  CHECK(eval3(conj(pU, pF), m, Scheme::StrongKleene) == F);
  CHECK(eval3(conj(pU, pF), m, Scheme::WeakKleene) == U);
  CHECK(eval3(conj(pT, pT), m, Scheme::WeakKleene) == T);

  // Exists: one true instance suffices for strong Kleene even with gaps.
  const Formula ex = exists(0, pred(var(0)));
  CHECK(eval3(ex, m, Scheme::StrongKleene) == T);
  CHECK(eval3(ex, m, Scheme::WeakKleene) == U);
  CHECK(eval3(neg(ex), m, Scheme::StrongKleene) == F);

  // All instances false makes the existential false under both schemes.
  const BoundedStructure m2(2, {}, {Nat(0), Nat(1), Nat(2)});
  CHECK(eval3(ex, m2, Scheme::StrongKleene) == F);
  CHECK(eval3(ex, m2, Scheme::WeakKleene) == F);
}

TEST_CASE("oracle-free evaluation is classical under both schemes") {
  tu::Rng rng(10001);
  const BoundedStructure m(3, {}, {});
  for (int i = 0; i < 300; ++i) {
    const Formula f = tu::random_sentence(rng, {.max_depth = 4});
    const TruthValue3 expected = tv3(eval_classical(f, m));
    CHECK(eval3(f, m, Scheme::StrongKleene) == expected);
    CHECK(eval3(f, m, Scheme::WeakKleene) == expected);
  }
}

TEST_CASE("classical reading of the oracle treats the extension as total") {
  const BoundedStructure m(4, {}, {});
  const std::set<Nat> ext{Nat(5)};
  CHECK(eval_classical_with_pred(pred(numeral(5)), m, ext));
  CHECK_FALSE(eval_classical_with_pred(pred(numeral(4)), m, ext));
  CHECK_FALSE(eval_classical_with_pred(exists(0, pred(var(0))), m, ext));  // 5 > domain bound
  CHECK(eval_classical_with_pred(exists(0, pred(var(0))), BoundedStructure(5, {}, {}), ext));
}

TEST_CASE("totality scans every instance over the domain") {
  const Formula p = pred(var(0));
  CHECK_FALSE(is_total(p, BoundedStructure(1, {Nat(0)}, {}), Scheme::StrongKleene));
  CHECK(is_total(p, BoundedStructure(1, {Nat(0)}, {Nat(1)}), Scheme::StrongKleene));
  CHECK(is_total(eq(var(0), zero()), BoundedStructure(3, {}, {}), Scheme::StrongKleene));
  CHECK(is_total(eq(zero(), zero()), BoundedStructure(3, {}, {}), Scheme::StrongKleene));
  CHECK_THROWS_AS(is_total(eq(var(0), var(1)), BoundedStructure(1, {}, {}), Scheme::StrongKleene),
                  TooManyFreeVars);
}

TEST_CASE("structures reject overlapping oracle extensions") {
  CHECK_THROWS_AS(BoundedStructure(2, {Nat(0)}, {Nat(0)}), Error);
  const BoundedStructure ok(2, {Nat(0)}, {Nat(1)});
  CHECK(ok.p_decides(0));
  CHECK(ok.p_decides(1));
  CHECK_FALSE(ok.p_decides(2));
}

TEST_CASE("three-valued helpers") {
  CHECK(tv3(true) == T);
  CHECK(tv3(false) == F);
  CHECK(tv3_not(T) == F);
  CHECK(tv3_not(F) == T);
  CHECK(tv3_not(U) == U);
  CHECK(to_string(T) == "True");
  CHECK(to_string(F) == "False");
  CHECK(to_string(U) == "Undefined");
}

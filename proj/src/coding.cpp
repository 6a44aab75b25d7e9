#include "truthlab/coding.hpp"

#include <optional>

namespace truthlab {

Nat cantor_pair(const Nat& a, const Nat& b) {
  Nat s = a + b;
  Nat z = s * (s + 1);
  z /= 2;
  return z + b;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  // s = floor((sqrt(8z+1) - 1) / 2), the diagonal index.
  Nat d = 8 * z + 1;
  Nat r;
  mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
  Nat s = (r - 1) / 2;
  Nat tri = s * (s + 1) / 2;
  Nat b = z - tri;
  Nat a = s - b;
  return {a, b};
}

namespace {


Nat tag_pair(unsigned tag, const Nat& payload) { return cantor_pair(tag, payload); }

}  // namespace

Nat encode(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return tag_pair(kTagZero, 0);
    case Term::Kind::Succ:
      return tag_pair(kTagSucc, encode(t.arg()));
    case Term::Kind::Add:
      return tag_pair(kTagAdd, cantor_pair(encode(t.lhs()), encode(t.rhs())));
    case Term::Kind::Mul:
      return tag_pair(kTagMul, cantor_pair(encode(t.lhs()), encode(t.rhs())));
    case Term::Kind::Var:
      return tag_pair(kTagVar, Nat(static_cast<unsigned long>(t.var_index())));
  }
  return 0;
}

Nat encode(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return tag_pair(kTagEq, cantor_pair(encode(f.lhs()), encode(f.rhs())));
    case Formula::Kind::Pred:
      return tag_pair(kTagPred, encode(f.pred_arg()));
    case Formula::Kind::Not:
      return tag_pair(kTagNot, encode(f.body()));
    case Formula::Kind::Or:
      return tag_pair(kTagOr, cantor_pair(encode(f.left()), encode(f.right())));
    case Formula::Kind::Exists:
      return tag_pair(kTagExists,
                      cantor_pair(Nat(static_cast<unsigned long>(f.bound_var())), encode(f.body())));
  }
  return 0;
}

namespace {

std::optional<Term> decode_term(const Nat& code);
std::optional<Formula> decode_formula(const Nat& code);

std::optional<Term> decode_term(const Nat& code) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag == kTagZero) {
    if (payload != 0) return std::nullopt;
    return zero();
  }
  if (tag == kTagSucc) {
    auto t = decode_term(payload);
    if (!t) return std::nullopt;
    return succ(std::move(*t));
  }
  if (tag == kTagAdd || tag == kTagMul) {
    auto [l, r] = cantor_unpair(payload);
    auto a = decode_term(l);
    auto b = decode_term(r);
    if (!a || !b) return std::nullopt;
    return tag == kTagAdd ? add(std::move(*a), std::move(*b)) : mul(std::move(*a), std::move(*b));
  }
  if (tag == kTagVar) {
    if (!payload.fits_ulong_p()) return std::nullopt;
    return var(payload.get_ui());
  }
  return std::nullopt;
}

std::optional<Formula> decode_formula(const Nat& code) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag == kTagEq) {
    auto [l, r] = cantor_unpair(payload);
    auto a = decode_term(l);
    auto b = decode_term(r);
    if (!a || !b) return std::nullopt;
    return eq(std::move(*a), std::move(*b));
  }
  if (tag == kTagPred) {
    auto t = decode_term(payload);
    if (!t) return std::nullopt;
    return pred(std::move(*t));
  }
  if (tag == kTagNot) {
    auto f = decode_formula(payload);
    if (!f) return std::nullopt;
    return neg(std::move(*f));
  }
  if (tag == kTagOr) {
    auto [l, r] = cantor_unpair(payload);
    auto a = decode_formula(l);
    auto b = decode_formula(r);
    if (!a || !b) return std::nullopt;
    return disj(std::move(*a), std::move(*b));
  }
  if (tag == kTagExists) {
    auto [v, body] = cantor_unpair(payload);
    if (!v.fits_ulong_p()) return std::nullopt;
    auto f = decode_formula(body);
    if (!f) return std::nullopt;
    return exists(v.get_ui(), std::move(*f));
  }
  return std::nullopt;
}

}  // namespace

Decoded decode(const Nat& code) {
  auto [tag, payload] = cantor_unpair(code);
  if (tag <= kTagVar) {
    if (auto t = decode_term(code)) return *t;
    return std::monostate{};
  }
  if (tag <= kTagExists) {
    if (auto f = decode_formula(code)) return *f;
    return std::monostate{};
  }
  return std::monostate{};
}

bool is_closed_term(const Nat& code) {
  Decoded d = decode(code);
  const Term* t = std::get_if<Term>(&d);
  return t && t->closed();
}

bool is_sentence(const Nat& code) {
  Decoded d = decode(code);
  const Formula* f = std::get_if<Formula>(&d);
  return f && f->closed() && !f->has_pred();
}

bool is_formula_le1(const Nat& code) {
  Decoded d = decode(code);
  const Formula* f = std::get_if<Formula>(&d);
  return f && f->free_vars().size() <= 1 && !f->has_pred();
}

Formula ind_instance(const Formula& phi, VarIndex v) {
  Formula step = forall(v, implies(phi, subst_term(phi, v, succ(var(v)))));
  Formula concl = implies(subst_term(phi, v, zero()), forall(v, phi));
  return universal_closure(implies(std::move(step), std::move(concl)));
}

Nat seq_code(const std::vector<Nat>& codes) {
  Nat chain = 0;
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) chain = cantor_pair(*it, chain);
  return cantor_pair(Nat(static_cast<unsigned long>(codes.size())), chain);
}

}  // namespace truthlab

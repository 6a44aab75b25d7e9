#include "truthlab/parser.hpp"

#include <cctype>
#include <sstream>

namespace truthlab {

namespace {

void print_term_rec(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      out += '0';
      return;
    case Term::Kind::Succ:
      out += "S(";
      print_term_rec(t.arg(), out);
      out += ')';
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out += '(';
      print_term_rec(t.lhs(), out);
      out += t.kind() == Term::Kind::Add ? " + " : " * ";
      print_term_rec(t.rhs(), out);
      out += ')';
      return;
    case Term::Kind::Var:
      out += 'v';
      out += std::to_string(t.var_index());
      return;
  }
}

void print_formula_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      out += '(';
      print_term_rec(f.lhs(), out);
      out += " = ";
      print_term_rec(f.rhs(), out);
      out += ')';
      return;
    case Formula::Kind::Pred:
      out += "P(";
      print_term_rec(f.pred_arg(), out);
      out += ')';
      return;
    case Formula::Kind::Not:
      out += '~';
      print_formula_rec(f.body(), out);
      return;
    case Formula::Kind::Or:
      out += '(';
      print_formula_rec(f.left(), out);
      out += " | ";
      print_formula_rec(f.right(), out);
      out += ')';
      return;
    case Formula::Kind::Exists:
      out += "E v";
      out += std::to_string(f.bound_var());
      out += ' ';
      print_formula_rec(f.body(), out);
      return;
  }
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos + 1), 0, pos + 1);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  VarIndex parse_var_index() {
    skip_ws();
    if (pos >= s.size() || s[pos] != 'v') fail("expected variable");
    ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected variable index");
    VarIndex k = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      k = k * 10 + static_cast<VarIndex>(s[pos] - '0');
      ++pos;
    }
    return k;
  }

  Term parse_term() {
    skip_ws();
    if (pos >= s.size()) fail("expected term");
    char c = s[pos];
    if (c == '0') {
      ++pos;
      return zero();
    }
    if (c == 'S') {
      ++pos;
      expect('(');
      Term t = parse_term();
      expect(')');
      return succ(std::move(t));
    }
    if (c == 'v') return var(parse_var_index());
    if (c == '(') {
      ++pos;
      Term a = parse_term();
      skip_ws();
      if (pos >= s.size()) fail("expected '+' or '*'");
      char op = s[pos];
      if (op != '+' && op != '*') fail("expected '+' or '*'");
      ++pos;
      Term b = parse_term();
      expect(')');
      return op == '+' ? add(std::move(a), std::move(b)) : mul(std::move(a), std::move(b));
    }
    fail("expected term");
  }

  Formula parse_formula() {
    skip_ws();
    if (pos >= s.size()) fail("expected formula");
    char c = s[pos];
    if (c == '~') {
      ++pos;
      return neg(parse_formula());
    }
    if (c == 'P') {
      ++pos;
      expect('(');
      Term t = parse_term();
      expect(')');
      return pred(std::move(t));
    }
    if (c == 'E' || c == 'A') {
      ++pos;
      VarIndex v = parse_var_index();
      Formula body = parse_formula();
      return c == 'E' ? exists(v, std::move(body)) : forall(v, std::move(body));
    }
    if (c == '(') {
      ++pos;
      // Either (t = t), (f op f), or a redundantly parenthesized formula.
      std::size_t saved = pos;
      bool term_ok = true;
      Term a;
      try {
        a = parse_term();
        skip_ws();
        term_ok = pos < s.size() && s[pos] == '=';
      } catch (const ParseError&) {
        term_ok = false;
      }
      if (term_ok) {
        ++pos;  // '='
        Term b = parse_term();
        expect(')');
        return eq(std::move(a), std::move(b));
      }
      pos = saved;
      Formula l = parse_formula();
      skip_ws();
      if (eat(')')) return l;  // redundant grouping
      if (pos >= s.size()) fail("expected connective");
      if (s[pos] == '|') {
        ++pos;
        Formula r = parse_formula();
        expect(')');
        return disj(std::move(l), std::move(r));
      }
      if (s[pos] == '&') {
        ++pos;
        Formula r = parse_formula();
        expect(')');
        return conj(std::move(l), std::move(r));
      }
      if (s[pos] == '-' && pos + 1 < s.size() && s[pos + 1] == '>') {
        pos += 2;
        Formula r = parse_formula();
        expect(')');
        return implies(std::move(l), std::move(r));
      }
      fail("expected '|', '&' or '->'");
    }
    fail("expected formula");
  }

  void expect_end() {
    skip_ws();
    if (pos != s.size()) fail("trailing input");
  }
};

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_term_rec(t, out);
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_rec(f, out);
  return out;
}

Term parse_term(const std::string& s) {
  Parser p{s};
  Term t = p.parse_term();
  p.expect_end();
  return t;
}

Formula parse_formula(const std::string& s) {
  Parser p{s};
  Formula f = p.parse_formula();
  p.expect_end();
  return f;
}

std::variant<Term, Formula> parse_any(const std::string& s) {
  try {
    return parse_formula(s);
  } catch (const ParseError&) {
    return parse_term(s);
  }
}

}  // namespace truthlab

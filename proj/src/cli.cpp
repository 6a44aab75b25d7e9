#include "truthlab/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "truthlab/axioms.hpp"
#include "truthlab/coding.hpp"
#include "truthlab/constructions.hpp"
#include "truthlab/errors.hpp"
#include "truthlab/fixpoint.hpp"
#include "truthlab/parser.hpp"
#include "truthlab/semantics.hpp"

namespace truthlab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<Formula> load_formulas(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<Formula> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    try {
      out.push_back(parse_formula(body));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), lineno,
                       e.column);
    }
  }
  return out;
}

Nat parse_nat(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw Error("not a natural number: '" + s + "'");
  return Nat(t);
}

std::set<Nat> parse_nat_set(const std::string& csv) {
  std::set<Nat> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.insert(parse_nat(item));
  }
  return out;
}

Assignment parse_assignment(const std::string& s) {
  Assignment sigma;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string kv = trim(item);
    if (kv.empty()) continue;
    const auto eqp = kv.find('=');
    if (eqp == std::string::npos || kv[0] != 'v')
      throw Error("bad assignment entry '" + kv + "'; expected v<k>=<n>");
    const std::string vs = trim(kv.substr(1, eqp - 1));
    const std::string ns = trim(kv.substr(eqp + 1));
    if (vs.empty() || vs.find_first_not_of("0123456789") != std::string::npos ||
        ns.empty() || ns.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad assignment entry '" + kv + "'; expected v<k>=<n>");
    sigma[std::stoull(vs)] = std::stoull(ns);
  }
  return sigma;
}

std::uint64_t universe_cap(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* s = std::getenv("TRUTHLAB_CAP_UNIVERSE")) {
    const std::string t(s);
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw Error("TRUTHLAB_CAP_UNIVERSE is not a natural number: '" + t + "'");
    return std::stoull(t);
  }
  return kDefaultUniverseCap;
}

struct StructureOpts {
  std::uint64_t domain = 2;
  std::string p_pos;
  std::string p_neg;

  BoundedStructure make() const {
    return BoundedStructure(domain, parse_nat_set(p_pos), parse_nat_set(p_neg));
  }
};

void add_structure_opts(CLI::App* cmd, StructureOpts* so) {
  cmd->add_option("--domain", so->domain, "quantifier domain bound N (domain {0..N})")
      ->capture_default_str();
  cmd->add_option("--p-pos", so->p_pos, "comma-separated P extension");
  cmd->add_option("--p-neg", so->p_neg, "comma-separated P anti-extension");
}

std::vector<Formula> p_free_members(const SentenceUniverse& u) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u.member(i).has_pred()) out.push_back(u.member(i));
  return out;
}

// Codes grow doubly exponentially in nesting depth (each pairing level
// roughly doubles the bit length), so `gen` guards code emission: skip the
// encode entirely when a cheap log2 bound exceeds kCodeBitsGuard, and print
// only results of at most kCodePrintDigits decimal digits.
constexpr double kCodeBitsGuard = double(1 << 22);
constexpr std::size_t kCodePrintDigits = 100'000;

double pair_bits(double a, double b) { return 2 * std::max(a, b) + 4; }

double code_bits(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Zero: return pair_bits(1, 1);
    case Term::Kind::Succ: return pair_bits(2, code_bits(t.arg()));
    case Term::Kind::Add: return pair_bits(2, pair_bits(code_bits(t.lhs()), code_bits(t.rhs())));
    case Term::Kind::Mul: return pair_bits(2, pair_bits(code_bits(t.lhs()), code_bits(t.rhs())));
    case Term::Kind::Var: return pair_bits(3, 64);
  }
  return 64;
}

double code_bits(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      return pair_bits(3, pair_bits(code_bits(f.lhs()), code_bits(f.rhs())));
    case Formula::Kind::Pred: return pair_bits(3, code_bits(f.pred_arg()));
    case Formula::Kind::Not: return pair_bits(3, code_bits(f.body()));
    case Formula::Kind::Or:
      return pair_bits(4, pair_bits(code_bits(f.left()), code_bits(f.right())));
    case Formula::Kind::Exists:
      return pair_bits(4, pair_bits(64, code_bits(f.body())));
  }
  return 64;
}

// Decimal code string if it fits the guards, else nullopt (code omitted).
std::optional<std::string> code_string(const Formula& f) {
  if (code_bits(f) > kCodeBitsGuard) return std::nullopt;
  std::string s = encode(f).get_str();
  if (s.size() > kCodePrintDigits) return std::nullopt;
  return s;
}

ordered_json code_json(const Formula& f) {
  if (auto s = code_string(f)) return *s;
  return nullptr;
}

std::string code_text(const Formula& f) {
  if (auto s = code_string(f)) return *s;
  return "(omitted: exceeds print guard)";
}

void emit_report_text(const AuditReport& rep, std::ostream& out) {
  out << "theory " << rep.theory << "\n";
  for (const auto& c : rep.clauses) {
    out << "clause " << c.clause << ": checked " << c.checked << ", skipped "
        << c.skipped << ", violations " << c.violations.size() << "\n";
    for (const auto& w : c.violations)
      out << "  " << print_formula(w.subject) << "  [" << w.detail << "]\n";
  }
  out << "result " << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

ordered_json report_json(const AuditReport& rep, std::uint64_t domain,
                         std::size_t universe_size, std::size_t truthset_size) {
  ordered_json j;
  j["theory"] = rep.theory;
  j["domain"] = domain;
  j["universe_size"] = universe_size;
  j["truthset_size"] = truthset_size;
  j["clauses"] = ordered_json::array();
  for (const auto& c : rep.clauses) {
    ordered_json cj;
    cj["clause"] = c.clause;
    cj["checked"] = c.checked;
    cj["skipped"] = c.skipped;
    cj["violations"] = ordered_json::array();
    for (const auto& w : c.violations)
      cj["violations"].push_back(
          {{"subject", print_formula(w.subject)}, {"detail", w.detail}});
    j["clauses"].push_back(std::move(cj));
  }
  j["pass"] = rep.pass();
  return j;
}

}  // namespace

std::vector<Formula> load_seed(const std::string& path) { return load_formulas(path); }

std::vector<Term> load_terms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::vector<Term> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    try {
      out.push_back(parse_term(body));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), lineno,
                       e.column);
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"syntactic constructions and partial truth over bounded arithmetic"};
  app.name("truthlab");
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "parse formulas, reprint canonically");
  cmd_parse->fallthrough();
  std::vector<std::string> parse_texts;
  cmd_parse->add_option("formula", parse_texts, "formulas")->required()->expected(-1);

  // encode
  auto* cmd_encode = app.add_subcommand("encode", "Goedel code of a formula or term");
  cmd_encode->fallthrough();
  std::string encode_text;
  bool encode_term = false;
  cmd_encode->add_option("text", encode_text, "formula or term")->required();
  cmd_encode->add_flag("--term", encode_term, "parse the argument as a term");

  // decode
  auto* cmd_decode = app.add_subcommand("decode", "decode a Goedel code");
  cmd_decode->fallthrough();
  std::string decode_text;
  cmd_decode->add_option("code", decode_text, "natural number")->required();

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula on a bounded structure");
  cmd_eval->fallthrough();
  StructureOpts eval_so;
  add_structure_opts(cmd_eval, &eval_so);
  std::string eval_scheme = "sk";
  std::string eval_assign;
  std::string eval_text;
  cmd_eval->add_option("--scheme", eval_scheme, "sk | wk | classical")
      ->check(CLI::IsMember({"sk", "wk", "classical"}))
      ->capture_default_str();
  cmd_eval->add_option("--assign", eval_assign, "free-variable values, e.g. v0=3,v1=5");
  cmd_eval->add_option("formula", eval_text, "formula")->required();

  // fixpoint
  auto* cmd_fix = app.add_subcommand("fixpoint", "Kripke least fixpoint over a seeded universe");
  cmd_fix->fallthrough();
  StructureOpts fix_so;
  add_structure_opts(cmd_fix, &fix_so);
  std::string fix_seed;
  std::optional<std::uint64_t> fix_cap;
  bool fix_serial = false;
  cmd_fix->add_option("--seed", fix_seed, "seed sentence file")->required();
  cmd_fix->add_option("--cap", fix_cap, "universe size cap");
  cmd_fix->add_flag("--serial", fix_serial, "use the serial reference step");

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "emit syntactic constructions");
  cmd_gen->fallthrough();
  std::string gen_kind;
  std::string gen_alphas, gen_betas, gen_psis, gen_phis, gen_formula, gen_var;
  std::uint64_t gen_start = 0, gen_b = 0, gen_c = 0, gen_bound = 0;
  cmd_gen->add_option("kind", gen_kind, "stopping | tau | theta-chain | omission | ind")
      ->required()
      ->check(CLI::IsMember({"stopping", "tau", "theta-chain", "omission", "ind"}));
  cmd_gen->add_option("--alphas", gen_alphas, "alpha formula file (stopping)");
  cmd_gen->add_option("--betas", gen_betas, "beta formula file (stopping)");
  cmd_gen->add_option("--start", gen_start, "scan start index (stopping)");
  cmd_gen->add_option("--index-bound", gen_b, "enumeration bound b (tau)");
  cmd_gen->add_option("--length", gen_c, "chain length c (tau)");
  cmd_gen->add_option("--psis", gen_psis, "psi formula file (theta-chain)");
  cmd_gen->add_option("--phis", gen_phis, "phi formula file (omission)");
  cmd_gen->add_option("--bound", gen_bound, "omission bound a");
  cmd_gen->add_option("--formula", gen_formula, "induction formula (ind)");
  cmd_gen->add_option("--var", gen_var, "induction variable index (ind)");

  // check
  auto* cmd_check = app.add_subcommand("check", "audit an axiom family against a truth set");
  cmd_check->fallthrough();
  StructureOpts chk_so;
  add_structure_opts(cmd_check, &chk_so);
  std::string chk_theory, chk_truthset = "fixpoint", chk_seed;
  std::string chk_templates, chk_terms, chk_phis;
  std::optional<std::uint64_t> chk_cap;
  bool chk_serial = false;
  cmd_check->add_option("--theory", chk_theory,
                        "pt | wpt | utb | neg | cc | gc | int | int-tot | tind")
      ->required()
      ->check(CLI::IsMember({"pt", "wpt", "utb", "neg", "cc", "gc", "int", "int-tot", "tind"}));
  cmd_check->add_option("--truthset", chk_truthset,
                        "fixpoint | tr | path to a sentence file")
      ->capture_default_str();
  cmd_check->add_option("--seed", chk_seed, "seed sentence file")->required();
  cmd_check->add_option("--templates", chk_templates,
                        "template file (utb, tr; default: P-free members)");
  cmd_check->add_option("--terms", chk_terms, "term file (utb; default: numerals 0..N)");
  cmd_check->add_option("--phis", chk_phis, "formula file (gc, int, int-tot, tind)");
  cmd_check->add_option("--cap", chk_cap, "universe size cap");
  cmd_check->add_flag("--serial", chk_serial, "use the serial reference step");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const bool json_out = format == "json";
  try {
    if (app.got_subcommand(cmd_parse)) {
      ordered_json arr = ordered_json::array();
      for (const auto& text : parse_texts) {
        const Formula f = parse_formula(text);
        if (json_out) {
          ordered_json j;
          j["input"] = text;
          j["canonical"] = print_formula(f);
          j["depth"] = f.depth();
          j["free_vars"] = f.free_vars();
          arr.push_back(std::move(j));
        } else {
          out << print_formula(f) << "\n";
        }
      }
      if (json_out) out << arr.dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand(cmd_encode)) {
      std::string kind;
      Nat code;
      std::string canonical;
      if (encode_term) {
        const Term t = parse_term(encode_text);
        kind = "term";
        code = encode(t);
        canonical = print_term(t);
      } else {
        const auto any = parse_any(encode_text);
        if (std::holds_alternative<Formula>(any)) {
          kind = "formula";
          code = encode(std::get<Formula>(any));
          canonical = print_formula(std::get<Formula>(any));
        } else {
          kind = "term";
          code = encode(std::get<Term>(any));
          canonical = print_term(std::get<Term>(any));
        }
      }
      if (json_out) {
        ordered_json j;
        j["kind"] = kind;
        j["canonical"] = canonical;
        j["code"] = code.get_str();
        out << j.dump(2) << "\n";
      } else {
        out << code.get_str() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_decode)) {
      const Nat code = parse_nat(decode_text);
      const Decoded d = decode(code);
      std::string kind = "invalid", text;
      if (std::holds_alternative<Formula>(d)) {
        kind = "formula";
        text = print_formula(std::get<Formula>(d));
      } else if (std::holds_alternative<Term>(d)) {
        kind = "term";
        text = print_term(std::get<Term>(d));
      }
      if (json_out) {
        ordered_json j;
        j["code"] = code.get_str();
        j["kind"] = kind;
        if (kind != "invalid") j["text"] = text;
        out << j.dump(2) << "\n";
      } else {
        out << (kind == "invalid" ? std::string("invalid") : text) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_eval)) {
      const Formula f = parse_formula(eval_text);
      const BoundedStructure m = eval_so.make();
      const Assignment sigma = parse_assignment(eval_assign);
      std::string value;
      if (eval_scheme == "classical")
        value = eval_classical(f, m, sigma) ? "True" : "False";
      else
        value = to_string(eval3(f, m,
                                eval_scheme == "sk" ? Scheme::StrongKleene
                                                    : Scheme::WeakKleene,
                                sigma));
      if (json_out) {
        ordered_json j;
        j["formula"] = print_formula(f);
        j["scheme"] = eval_scheme;
        j["domain"] = eval_so.domain;
        j["value"] = value;
        out << j.dump(2) << "\n";
      } else {
        out << value << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_fix)) {
      const BoundedStructure m = fix_so.make();
      const auto seeds = load_seed(fix_seed);
      const SentenceUniverse u = build_universe(seeds, m, universe_cap(fix_cap));
      const LfpResult r = least_fixpoint(u, m, !fix_serial);

      struct Entry {
        Nat code;
        std::int64_t stage;
        std::string text;
      };
      std::vector<Entry> entries;
      for (std::size_t i = 0; i < u.size(); ++i)
        if (r.fixpoint.contains_index(i))
          entries.push_back({encode(u.member(i)), r.trace.entry[i],
                             print_formula(u.member(i))});
      std::sort(entries.begin(), entries.end(),
                [](const Entry& a, const Entry& b) { return a.code < b.code; });

      if (json_out) {
        ordered_json j;
        j["universe_size"] = u.size();
        j["stages"] = r.trace.total_stages;
        j["entries"] = ordered_json::array();
        for (const auto& e : entries)
          j["entries"].push_back({{"formula", e.text},
                                  {"code", e.code.get_str()},
                                  {"stage", e.stage}});
        j["fixpoint_size"] = r.fixpoint.size();
        out << j.dump(2) << "\n";
      } else {
        out << "universe " << u.size() << ", stages " << r.trace.total_stages
            << ", fixpoint " << r.fixpoint.size() << "\n";
        for (const auto& e : entries)
          out << e.code.get_str() << "\t@" << e.stage << "\t" << e.text << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(cmd_gen)) {
      auto emit = [&](const char* kind, std::vector<std::pair<std::string, ordered_json>> fields,
                      const std::vector<std::pair<std::string, std::string>>& lines) {
        if (json_out) {
          ordered_json j;
          j["kind"] = kind;
          for (auto& [k, v] : fields) j[k] = std::move(v);
          out << j.dump(2) << "\n";
        } else {
          for (const auto& [label, text] : lines)
            out << (label.empty() ? "" : label + ": ") << text << "\n";
        }
      };

      if (gen_kind == "stopping") {
        if (gen_alphas.empty() || gen_betas.empty())
          throw Error("gen stopping needs --alphas and --betas");
        const auto alphas = load_formulas(gen_alphas);
        const auto betas = load_formulas(gen_betas);
        const Formula d = stopping_disjunction(alphas, betas, gen_start);
        emit("stopping",
             {{"start", gen_start}, {"formula", print_formula(d)}, {"code", code_json(d)}},
             {{"", print_formula(d)}, {"code", code_text(d)}});
        return 0;
      }
      if (gen_kind == "tau") {
        if (!cmd_gen->count("--index-bound") || !cmd_gen->count("--length"))
          throw Error("gen tau needs --index-bound and --length");
        const TauFamily tf = tau_family(gen_b, gen_c);
        ordered_json alphas = ordered_json::array(), betas = ordered_json::array();
        std::vector<std::pair<std::string, std::string>> lines;
        for (std::size_t i = 0; i < tf.alphas.size(); ++i) {
          alphas.push_back(print_formula(tf.alphas.at(i)));
          lines.push_back({"alpha " + std::to_string(i), print_formula(tf.alphas.at(i))});
        }
        for (std::size_t i = 0; i < tf.betas.size(); ++i) {
          betas.push_back(print_formula(tf.betas.at(i)));
          lines.push_back({"beta " + std::to_string(i), print_formula(tf.betas.at(i))});
        }
        lines.push_back({"tau", print_formula(tf.tau)});
        lines.push_back({"code", code_text(tf.tau)});
        emit("tau",
             {{"b", tf.b}, {"c", tf.c}, {"alphas", std::move(alphas)},
              {"betas", std::move(betas)}, {"tau", print_formula(tf.tau)},
              {"code", code_json(tf.tau)}},
             lines);
        return 0;
      }
      if (gen_kind == "theta-chain") {
        if (gen_psis.empty()) throw Error("gen theta-chain needs --psis");
        const Formula d = theta_chain(load_formulas(gen_psis));
        emit("theta-chain", {{"formula", print_formula(d)}, {"code", code_json(d)}},
             {{"", print_formula(d)}, {"code", code_text(d)}});
        return 0;
      }
      if (gen_kind == "omission") {
        if (gen_phis.empty() || !cmd_gen->count("--bound"))
          throw Error("gen omission needs --phis and --bound");
        const OmissionFamily of = omission_family(load_formulas(gen_phis), gen_bound);
        ordered_json alphas = ordered_json::array(), betas = ordered_json::array();
        std::vector<std::pair<std::string, std::string>> lines;
        for (std::size_t i = 0; i < of.alphas.size(); ++i) {
          const Formula& f = of.alphas.at(i);
          alphas.push_back({{"formula", print_formula(f)}, {"code", code_json(f)}});
          lines.push_back({"alpha " + std::to_string(i), print_formula(f)});
          lines.push_back({"alpha " + std::to_string(i) + " code", code_text(f)});
        }
        for (std::size_t i = 0; i < of.betas.size(); ++i) {
          const Formula& f = of.betas.at(i);
          betas.push_back({{"formula", print_formula(f)}, {"code", code_json(f)}});
          lines.push_back({"beta " + std::to_string(i), print_formula(f)});
          lines.push_back({"beta " + std::to_string(i) + " code", code_text(f)});
        }
        emit("omission",
             {{"bound", gen_bound}, {"alphas", std::move(alphas)},
              {"betas", std::move(betas)}},
             lines);
        return 0;
      }
      // ind
      if (gen_formula.empty()) throw Error("gen ind needs --formula");
      const Formula phi = parse_formula(gen_formula);
      VarIndex v = 0;
      if (!gen_var.empty()) {
        if (gen_var.find_first_not_of("0123456789") != std::string::npos)
          throw Error("--var must be a variable index");
        v = std::stoull(gen_var);
      } else if (!phi.free_vars().empty()) {
        v = phi.free_vars()[0];
      }
      const Formula ind = ind_instance(phi, v);
      emit("ind", {{"var", v}, {"formula", print_formula(ind)}, {"code", code_json(ind)}},
           {{"", print_formula(ind)}, {"code", code_text(ind)}});
      return 0;
    }

    // check
    const BoundedStructure m = chk_so.make();
    const auto seeds = load_seed(chk_seed);
    const SentenceUniverse u = build_universe(seeds, m, universe_cap(chk_cap));

    std::vector<Formula> templates;
    if (!chk_templates.empty())
      templates = load_formulas(chk_templates);
    else
      templates = p_free_members(u);

    TruthSet a(u);
    if (chk_truthset == "fixpoint") {
      a = least_fixpoint(u, m, !chk_serial).fixpoint;
    } else if (chk_truthset == "tr") {
      a = tr_construction(m, templates, u);
    } else {
      for (const Formula& f : load_formulas(chk_truthset)) {
        if (!u.contains(f))
          throw NotInUniverse("truth set sentence outside the universe: " +
                              print_formula(f));
        a.insert(f);
      }
    }

    AuditReport rep;
    if (chk_theory == "pt") {
      rep = check_pt_minus(m, a, u);
    } else if (chk_theory == "wpt") {
      rep = check_wpt_minus(m, a, u);
    } else if (chk_theory == "utb") {
      std::vector<Term> terms;
      if (!chk_terms.empty()) {
        terms = load_terms(chk_terms);
      } else {
        for (std::uint64_t x = 0; x <= m.n_bound; ++x) terms.push_back(numeral(x));
      }
      rep = check_utb(m, a, templates, terms);
    } else if (chk_theory == "neg") {
      rep = check_neg(m, a, u);
    } else if (chk_theory == "cc") {
      rep = cc_audit(m, a, u);
    } else {
      if (chk_phis.empty())
        throw Error("--phis is required for --theory " + chk_theory);
      const auto phis = load_formulas(chk_phis);
      if (chk_theory == "gc")
        rep = gc_audit(m, a, u, phis);
      else if (chk_theory == "tind")
        rep = check_truth_of_induction(m, a, u, phis);
      else
        rep = check_int(m, a, u, phis, chk_theory == "int-tot");
    }

    if (json_out)
      out << report_json(rep, m.n_bound, u.size(), a.size()).dump(2) << "\n";
    else
      emit_report_text(rep, out);
    return rep.pass() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace truthlab

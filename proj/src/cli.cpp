#include "tcomb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "tcomb/catalogue.hpp"
#include "tcomb/combine.hpp"
#include "tcomb/errors.hpp"
#include "tcomb/minmod.hpp"
#include "tcomb/reductions.hpp"

namespace tcomb::cli {

namespace {

struct Config {
  std::string params_path;
  std::size_t max_size = 8;
  int verbosity = 0;

  std::string theory, t1, t2, engine = "no";
  std::string formula_path, expr;
  std::string family, oracle = "analytic";
  std::size_t upto = 8;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

TheoryParams params_of(const Config& c) {
  return c.params_path.empty() ? TheoryParams::standard() : load_params_file(c.params_path);
}

// One formula per non-blank line; lines starting with ';' or '#' are comments.
std::vector<std::string> formula_texts(const Config& c) {
  if (c.formula_path.empty() == c.expr.empty()) throw UsageError("give exactly one of --formula and --expr");
  if (!c.expr.empty()) return {c.expr};
  std::ifstream in(c.formula_path);
  if (!in) throw UsageError("cannot read formula file '" + c.formula_path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == ';' || line[b] == '#') continue;
    out.push_back(line.substr(b));
  }
  if (out.empty()) throw UsageError("formula file '" + c.formula_path + "' has no formulas");
  return out;
}

std::string label(const std::string& text, int verbosity) { return verbosity >= 1 ? text + " : " : ""; }

TheoryHandle theory_of(const std::string& name, const Config& c) {
  if (name.empty()) throw UsageError("--theory is required");
  return theory_by_name(name, params_of(c));
}

int cmd_decide(const Config& c, std::ostream& out) {
  TheoryHandle h = theory_of(c.theory, c);
  int rc = kExitOk;
  for (const auto& text : formula_texts(c)) {
    Verdict v = decide_qf(h, parse_formula(text, h.sig));
    out << label(text, c.verbosity) << to_string(v) << "\n";
    if (!is_sat(v)) rc = kExitNegative;
  }
  return rc;
}

int cmd_spectrum(const Config& c, std::ostream& out) {
  TheoryHandle h = theory_of(c.theory, c);
  int rc = kExitOk;
  for (const auto& text : formula_texts(c)) {
    Spectrum s = spectrum_qf(h, parse_formula(text, h.sig));
    out << label(text, c.verbosity) << s.str() << "\n";
    if (s.is_empty()) rc = kExitNegative;
  }
  return rc;
}

int cmd_witness(const Config& c, std::ostream& out) {
  TheoryHandle h = theory_of(c.theory, c);
  if (!h.witness) throw CapabilityError(h.name + ": no witness");
  for (const auto& text : formula_texts(c))
    out << label(text, c.verbosity) << to_string(h.witness(parse_cube(text, h.sig))) << "\n";
  return kExitOk;
}

int cmd_minmod(const Config& c, std::ostream& out) {
  TheoryHandle h = theory_of(c.theory, c);
  int rc = kExitOk;
  for (const auto& text : formula_texts(c)) {
    auto mm = minmod(h, parse_cube(text, h.sig));
    out << label(text, c.verbosity);
    if (!mm) {
      out << "unsat\n";
      rc = kExitNegative;
      continue;
    }
    out << mm->value.str();
    if (c.verbosity >= 2 && mm->arrangement) out << " " << to_string(*mm->arrangement);
    out << "\n";
  }
  return rc;
}

int cmd_combine(const Config& c, std::ostream& out) {
  auto engine = engine_from_name(c.engine);
  if (!engine) throw UsageError("unknown engine '" + c.engine + "'");
  if (c.t1.empty() || c.t2.empty()) throw UsageError("--t1 and --t2 are required");
  TheoryHandle t1 = theory_of(c.t1, c), t2 = theory_of(c.t2, c);
  Signature sig = Signature::united(t1.sig, t2.sig);
  int rc = kExitOk;
  for (const auto& text : formula_texts(c)) {
    CombinationResult r = combine_qf(*engine, t1, t2, parse_formula(text, sig));
    out << label(text, c.verbosity) << to_string(r.verdict) << "\n";
    if (c.verbosity >= 2 && r.arrangement) {
      out << "  arrangement: " << to_string(*r.arrangement) << "\n";
      for (const auto& n : r.notes) out << "  " << n << "\n";
    }
    if (!is_sat(r.verdict)) rc = kExitNegative;
  }
  return rc;
}

CombinedOracle oracle_of(const Config& c, const TheoryParams& p) {
  if (c.oracle == "analytic") return make_analytic_oracle(c.family, p);
  if (c.oracle == "bruteforce") return make_bruteforce_oracle(c.family, p, c.max_size);
  throw UsageError("unknown oracle '" + c.oracle + "'");
}

int cmd_recover(const Config& c, std::ostream& out) {
  TheoryParams p = params_of(c);
  std::vector<int> got, want;
  std::string name;
  if (c.family == "tf-teq") {
    name = "f";
    got = recover_f(oracle_of(c, p), c.upto);
    want = p.f.bits();
  } else if (c.family == "tg-torb2") {
    name = "g";
    got = recover_g(oracle_of(c, p), c.upto);
    want = p.g.bits();
  } else {
    throw UsageError("recover: --family must be tf-teq or tg-torb2");
  }
  if (want.size() < got.size())
    throw RangeError("recover: table " + name + " has only " + std::to_string(want.size()) + " entries");
  out << name << ":";
  for (int b : got) out << " " << b;
  out << "\n";
  bool match = std::equal(got.begin(), got.end(), want.begin());
  out << (match ? "MATCH" : "MISMATCH") << "\n";
  return match ? kExitOk : kExitNegative;
}

int cmd_oracle_check(const Config& c, std::ostream& out) {
  if (c.family != "tf-teq" && c.family != "tg-torb2")
    throw UsageError("oracle-check: --family must be tf-teq or tg-torb2");
  auto rows = compare_oracles(c.family, params_of(c), c.max_size);
  std::size_t bad = 0;
  for (const auto& r : rows) {
    bool same = r.analytic == r.bruteforce;
    if (!same) ++bad;
    if (c.verbosity >= 1 || !same)
      out << r.query << " : analytic " << to_string(r.analytic) << ", bruteforce " << to_string(r.bruteforce)
          << (same ? "" : "  DISAGREE") << "\n";
  }
  out << rows.size() << " queries, " << bad << " disagreements\n";
  out << (bad == 0 ? "AGREE" : "DISAGREE") << "\n";
  return bad == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Theory combination workbench", "tcomb"};
  app.require_subcommand(1);
  app.add_option("--params", c.params_path, "Parameter table file");
  app.add_option("--max-size", c.max_size, "Largest model size for brute-force search")->check(CLI::Range(1, 12));
  app.add_option("--verbosity", c.verbosity, "0, 1 or 2")->check(CLI::Range(0, 2));

  auto formula_opts = [&](CLI::App* sub) {
    sub->add_option("--formula", c.formula_path, "File with one formula per line");
    sub->add_option("--expr", c.expr, "Inline formula");
  };
  auto single = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--theory", c.theory, "Theory name")->required();
    formula_opts(sub);
    return sub;
  };
  CLI::App* decide = single("decide", "Satisfiability in one theory");
  CLI::App* spectrum = single("spectrum", "Cardinality spectrum");
  CLI::App* witness = single("witness", "Witness of a cube");
  CLI::App* mm = single("minmod", "Minimal model size");
  CLI::App* combine = app.add_subcommand("combine", "Satisfiability in a combination of two theories");
  combine->add_option("--engine", c.engine, "no | gentle-cfs | minmod-infdec | both-gentle");
  combine->add_option("--t1", c.t1)->required();
  combine->add_option("--t2", c.t2)->required();
  formula_opts(combine);
  CLI::App* recover = app.add_subcommand("recover", "Recover a parameter table from an oracle");
  recover->add_option("--family", c.family, "tf-teq | tg-torb2")->required();
  recover->add_option("--oracle", c.oracle, "analytic | bruteforce");
  recover->add_option("--upto", c.upto, "Number of entries to recover")->check(CLI::Range(1, 4096));
  CLI::App* check = app.add_subcommand("oracle-check", "Compare the analytic and brute-force oracles");
  check->add_option("--family", c.family, "tf-teq | tg-torb2")->required();

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_option("--params", c.params_path, "Parameter table file");
    sub->add_option("--max-size", c.max_size, "Largest model size for brute-force search")->check(CLI::Range(1, 12));
    sub->add_option("--verbosity", c.verbosity, "0, 1 or 2")->check(CLI::Range(0, 2));
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream report;
  int rc = kExitUsage;
  try {
    if (decide->parsed()) rc = cmd_decide(c, report);
    else if (spectrum->parsed()) rc = cmd_spectrum(c, report);
    else if (witness->parsed()) rc = cmd_witness(c, report);
    else if (mm->parsed()) rc = cmd_minmod(c, report);
    else if (combine->parsed()) rc = cmd_combine(c, report);
    else if (recover->parsed()) rc = cmd_recover(c, report);
    else if (check->parsed()) rc = cmd_oracle_check(c, report);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  out << report.str();
  return rc;
}

}  // namespace tcomb::cli

// superengel: decide the bounded Engel property of enveloping algebras of
// finite-dimensional Lie superalgebras and check the answer by brute force.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "superengel/gallery.hpp"
#include "superengel/io.hpp"

using namespace superengel;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kBudget = 3, kDisagree = 4 };

struct Globals {
  bool json = false;
  std::uint64_t budget = default_budget();
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void emit(const Globals& g, json report, const std::string& text, Clock::time_point t0) {
  if (g.json) {
    report["timing"] = {{"seconds", seconds_since(t0)}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string mark(bool b) { return b ? "yes" : "no"; }

std::string condition_text(const Condition& c, int indent) {
  std::string pad(indent, ' ');
  std::string s = pad + (c.holds ? "[x] " : "[ ] ") + c.name;
  if (c.automatic) s += " (automatic)";
  else if (c.certainty != Certainty::Exact) s += std::string(" (") + to_string(c.certainty) + ")";
  s += "\n";
  if (!c.witness.empty()) s += pad + "    " + c.witness + "\n";
  if (!c.note.empty()) s += pad + "    note: " + c.note + "\n";
  for (const auto& a : c.alternatives) s += condition_text(a, indent + 4);
  return s;
}

std::string verdict_text(const LieSuperalgebra& L, const Verdict& v) {
  std::string s = std::string("setting: ") + to_string(v.setting) + "\n";
  s += std::string("bounded Engel: ") + (v.holds ? "true" : "false") + " (" + to_string(v.certainty) + ")\n";
  for (const auto& c : v.conditions) s += condition_text(c, 2);
  if (v.pi) {
    s += "PI certificate: A = " + v.pi->a_label + ", B = span{";
    for (std::size_t i = 0; i < v.pi->B.dim(); ++i) s += (i ? ", " : "") + L.format(v.pi->B.basis()[i]);
    s += "}";
    for (const auto& f : v.pi->flags) s += " [" + f + "]";
    s += "\n";
  }
  if (v.engel_bound) s += "Engel bound: " + std::to_string(*v.engel_bound) + "\n";
  if (v.exponents)
    s += "exponents: nil index " + std::to_string(v.exponents->nil_index) + ", m = " + std::to_string(v.exponents->m) +
         ", s = " + std::to_string(v.exponents->s) + ", chain s = " + std::to_string(v.exponents->chain_s) +
         ", bound " + std::to_string(v.exponents->bound) + "\n";
  for (const auto& n : v.notes) s += "note: " + n + "\n";
  return s;
}

std::string oracle_text(const LieSuperalgebra& L, const OracleResult& r) {
  const json j = io::oracle_json(L, r);
  std::string s = "oracle: " + r.summary() + "\n  tier " + r.tier + ", spent " + std::to_string(r.budget_spent) + "\n";
  const auto& res = j["result"];
  if (res["kind"] == "not-engel")
    s += "  a = " + res["a"].get<std::string>() + "\n  b = " + res["b"].get<std::string>() + "\n";
  return s;
}

// Reads and validates; prints the validation section and returns nullopt on failure.
std::optional<LieSuperalgebra> load(const Globals& g, const std::string& path, json& report, int& code) {
  RawAlgebra raw;
  try {
    raw = io::read_algebra(path);
  } catch (const Error& e) {
    report["validation"] = {{"ok", false}, {"error", e.what()}};
    if (g.json) std::cout << report.dump(2) << "\n";
    else std::cerr << e.what() << "\n";
    code = kInvalid;
    return std::nullopt;
  }
  report["input"] = io::input_json(raw);
  auto res = LieSuperalgebra::validate(raw, g.budget);
  report["validation"] = io::validation_json(res.report);
  if (!res.report.ok()) {
    if (g.json) std::cout << report.dump(2) << "\n";
    else std::cerr << "invalid algebra:\n" << res.report.summary() << "\n";
    const bool budget = res.report.error && (*res.report.error == ErrorCode::BudgetExceeded ||
                                             *res.report.error == ErrorCode::VariableBudgetExceeded);
    code = budget ? kBudget : kInvalid;
    return std::nullopt;
  }
  return std::move(res.algebra);
}

bool budget_inconclusive(const OracleResult& r) {
  const auto* inc = std::get_if<Inconclusive>(&r.verdict);
  return inc && inc->reason.rfind("budget", 0) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded Engel conditions for enveloping algebras of Lie superalgebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_option("--budget", g.budget, "Enumeration budget (default from SUPERENGEL_BUDGET)");

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check the axioms");
  validate->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "Series, center and related subspaces");
  analyze->add_option("file", file)->required();

  std::string setting_name = "auto";
  auto* decide_cmd = app.add_subcommand("decide", "Structural verdict");
  decide_cmd->add_option("file", file)->required();
  decide_cmd->add_option("--setting", setting_name)->check(CLI::IsMember({"auto", "char0", "ordinary", "restricted"}));

  OracleOptions opts;
  std::string mode_name = "auto";
  auto* oracle = app.add_subcommand("oracle", "Brute-force Engel oracle");
  oracle->add_option("file", file)->required();
  oracle->add_option("--mode", mode_name)->check(CLI::IsMember({"auto", "exact", "symbolic", "certificate", "sample"}));
  oracle->add_option("--setting", setting_name)->check(CLI::IsMember({"auto", "char0", "ordinary", "restricted"}));
  oracle->add_option("--max-n", opts.max_n);
  oracle->add_option("--trunc", opts.trunc);
  oracle->add_option("--seed", opts.seed);
  oracle->add_option("--trials", opts.trials);

  std::string corpus;
  std::size_t count = 100, dim_even = 2, dim_odd = 2;
  std::uint32_t corpus_p = 3;
  std::uint64_t corpus_seed = 7;
  auto* cross = app.add_subcommand("cross-check", "Verdict against oracle");
  cross->add_option("file", file);
  cross->add_option("--setting", setting_name)->check(CLI::IsMember({"auto", "char0", "ordinary", "restricted"}));
  cross->add_option("--corpus", corpus)->check(CLI::IsMember({"random"}));
  cross->add_option("--count", count);
  cross->add_option("--dim-even", dim_even);
  cross->add_option("--dim-odd", dim_odd);
  cross->add_option("--p", corpus_p);
  cross->add_option("--seed", corpus_seed);
  cross->add_option("--max-n", opts.max_n);
  cross->add_option("--trunc", opts.trunc);

  std::string name, out;
  unsigned m = 3;
  std::uint32_t p = 3;
  bool restricted = false;
  long long zp = 0;
  auto* gallery_cmd = app.add_subcommand("gallery", "Emit a built-in algebra");
  gallery_cmd->add_option("--name", name)->required();
  gallery_cmd->add_option("--m", m);
  gallery_cmd->add_option("--p", p);
  gallery_cmd->add_flag("--restricted", restricted);
  gallery_cmd->add_option("--zp", zp, "z^[p] coefficient for the restricted Heisenberg algebra");
  gallery_cmd->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);
  opts.budget = g.budget;
  const auto t0 = Clock::now();
  json report;
  int code = kOk;

  try {
    if (*gallery_cmd) {
      std::optional<RawAlgebra> raw;
      if ((name == "G2" || name == "heisenberg") && zp != 0) raw = gallery::heisenberg(p, true, zp);
      else raw = gallery::by_name(name, m, p, restricted);
      if (!raw) {
        std::cerr << "unknown gallery name " << name << "; known:";
        for (const auto& n : gallery::names()) std::cerr << " " << n;
        std::cerr << "\n";
        return kInvalid;
      }
      if (out.empty()) {
        std::cout << io::algebra_to_json(*raw).dump(2) << "\n";
      } else {
        io::write_algebra(*raw, out);
        if (g.json) std::cout << json{{"written", out}, {"digest", io::digest(*raw)}}.dump(2) << "\n";
        else std::cout << "wrote " << out << " (" << io::digest(*raw) << ")\n";
      }
      return kOk;
    }

    if (*cross && !corpus.empty()) {
      auto r = cross_validate_corpus(count, dim_even, dim_odd, corpus_p, corpus_seed, opts);
      report["corpus"] = io::corpus_json(r);
      report["corpus"]["parameters"] = {{"count", count}, {"dim_even", dim_even}, {"dim_odd", dim_odd},
                                        {"p", corpus_p},   {"seed", corpus_seed}};
      std::size_t engel = 0;
      for (const auto& e : r.entries) engel += e.result.verdict.holds;
      std::string text = std::to_string(r.entries.size()) + " instances: " + std::to_string(engel) +
                         " Engel, " + std::to_string(r.entries.size() - engel) + " not Engel\n" +
                         "disagreements: " + std::to_string(r.disagreements) + "\ninconclusive: " +
                         std::to_string(r.inconclusive) + "\nlemma failures: " + std::to_string(r.lemma_failures) + "\n";
      for (const auto& e : r.entries)
        if (e.result.agreement == Agreement::Disagree)
          text += "  seed " + std::to_string(e.seed) + ": " + e.result.explanation + "\n";
      emit(g, report, text, t0);
      return r.disagreements ? kDisagree : kOk;
    }
    if (*cross && file.empty()) {
      std::cerr << "cross-check needs a file or --corpus random\n";
      return kInvalid;
    }

    auto L = load(g, file, report, code);
    if (!L) return code;
    const Setting setting = setting_name == "auto" ? default_setting(*L) : *parse_setting(setting_name);

    if (*validate) {
      emit(g, report, "ok: " + std::to_string(L->n_even()) + " even, " + std::to_string(L->n_odd()) + " odd\n", t0);
    } else if (*analyze) {
      const json a = io::analysis_json(*L, g.budget);
      report["analysis"] = a;
      std::string text = a.dump(2) + "\n";
      emit(g, report, text, t0);
    } else if (*decide_cmd) {
      const Verdict v = decide(*L, setting, g.budget);
      report["verdict"] = io::verdict_json(*L, v);
      emit(g, report, verdict_text(*L, v), t0);
    } else if (*oracle) {
      if (mode_name != "auto") opts.mode = parse_oracle_mode(mode_name);
      const OracleResult r = run_oracle(*L, setting == Setting::Restricted, opts);
      report["oracle"] = io::oracle_json(*L, r);
      report["oracle"]["setting"] = to_string(setting);
      emit(g, report, oracle_text(*L, r), t0);
      if (budget_inconclusive(r)) code = kBudget;
    } else if (*cross) {
      const CrossValidation cv = cross_validate(*L, setting, opts);
      report["cross_validation"] = io::cross_validation_json(*L, cv);
      std::string text = verdict_text(*L, cv.verdict) + oracle_text(*L, cv.oracle) +
                         "agreement: " + to_string(cv.agreement) + "\n  " + cv.explanation + "\n";
      for (const auto& l : cv.lemmas) text += "lemma " + l.name + ": " + mark(l.holds) + "\n";
      emit(g, report, text, t0);
      if (cv.agreement == Agreement::Disagree) code = kDisagree;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::BudgetExceeded:
      case ErrorCode::VariableBudgetExceeded:
        return kBudget;
      case ErrorCode::ValidationFailed:
      case ErrorCode::ParseError:
      case ErrorCode::CharTwoRejected:
        return kInvalid;
      default:
        return 1;
    }
  }
  return code;
}

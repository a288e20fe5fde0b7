// Command-line front end: compute, check and fuzz subcommands.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kreg/errors.hpp"
#include "kreg/parser.hpp"
#include "kreg/report.hpp"

using namespace kreg;
using nlohmann::json;

namespace {

enum Exit : int {
  kOk = 0,
  kParse = 2,
  kSemantic = 3,
  kPrecondition = 4,
  kViolation = 5,
  kGeneration = 6,
};

struct Failure {
  int code;
  std::string msg;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kParse, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kSemantic, "cannot write " + path};
  out << text;
}

CaseFile load_case(const std::string& path) {
  try {
    return parse_case_file(read_file(path));
  } catch (const CaseFileError& e) {
    throw Failure{e.kind() == CaseFileError::Kind::syntax ? kParse : kSemantic, e.what()};
  }
}

// The module a compute command acts on: M if given, else S/I.
ModulePresentation target_module(const CaseFile& cf) {
  const TheoremCase& c = cf.theorem_case;
  if (c.module) return *c.module;
  return ModulePresentation::cyclic(c.ring(), c.generators.elements());
}

std::string betti_text(const BettiTable& B) {
  if (B.empty()) return "zero module\n";
  int imax = 0, rmin = INT32_MAX, rmax = INT32_MIN;
  for (const auto& [ij, b] : B.entries) {
    imax = std::max(imax, ij.first);
    rmin = std::min(rmin, ij.second - ij.first);
    rmax = std::max(rmax, ij.second - ij.first);
  }
  std::ostringstream out;
  out << std::setw(8) << "";
  for (int i = 0; i <= imax; ++i) out << std::setw(6) << i;
  out << "\n";
  std::vector<std::int64_t> totals(static_cast<std::size_t>(imax) + 1, 0);
  for (const auto& [ij, b] : B.entries) totals[static_cast<std::size_t>(ij.first)] += b;
  out << std::setw(8) << "total:";
  for (auto t : totals) out << std::setw(6) << t;
  out << "\n";
  for (int r = rmin; r <= rmax; ++r) {
    out << std::setw(7) << r << ":";
    for (int i = 0; i <= imax; ++i) {
      auto it = B.entries.find({i, i + r});
      out << std::setw(6);
      if (it == B.entries.end())
        out << ".";
      else
        out << it->second;
    }
    out << "\n";
  }
  return out.str();
}

json t_list(const BettiTable& B) {
  json t = json::array();
  for (int i = 0; i <= B.length(); ++i) t.push_back(reg_json(t_index(B, i)));
  return t;
}

int cmd_compute(const std::string& what, const std::string& input, std::optional<int> dmax_flag, bool text,
                const std::string& out_path) {
  const CaseFile cf = load_case(input);
  const std::optional<int> dmax = dmax_flag ? dmax_flag : cf.d_max;
  json out = {{"schema_version", kSchemaVersion}, {"what", what}};
  std::string human;

  if (what == "resolve" || what == "reg") {
    const ModulePresentation M = target_module(cf);
    const Resolution R = minimal_free_resolution(M);
    if (what == "resolve") {
      out["betti"] = betti_json(R.betti);
      out["pd"] = R.length();
      json ranks = json::array();
      for (int i = 0; i <= R.length(); ++i) ranks.push_back(R.complex.module(i).rank());
      out["ranks"] = ranks;
      human = betti_text(R.betti);
    } else {
      human = "reg = " + reg_json(regularity(R.betti)).dump() + "\n";
    }
    out["reg"] = reg_json(regularity(R.betti));
    out["t"] = t_list(R.betti);
  } else if (what == "hilbert") {
    const ModulePresentation M = target_module(cf);
    const int lo = M.generators.mindeg().value_or(0);
    int hi = lo;
    if (dmax) {
      hi = *dmax;
    } else {
      hi = regularity(minimal_free_resolution(M).betti).value_or(lo) + 2;
    }
    if (hi < lo) throw Failure{kSemantic, "dmax is below the lowest generator degree"};
    const HilbertFunction hf = hilbert_function(M, lo, hi);
    out["hilbert"] = hilbert_json(hf);
    for (int d = lo; d <= hi; ++d) human += std::to_string(d) + ": " + std::to_string(hf.at(d)) + "\n";
  } else if (what == "koszul") {
    const TheoremCase& c = cf.theorem_case;
    const KoszulHomology kh = koszul_homology(c.generators, c.module_or_ring());
    std::vector<Resolution> res;
    int top = c.module_or_ring().generators.mindeg().value_or(0);
    for (const auto& H : kh.homology) {
      res.push_back(minimal_free_resolution(H));
      if (auto r = regularity(res.back().betti)) top = std::max(top, *r);
    }
    const int lo = c.module_or_ring().generators.mindeg().value_or(0);
    const int hi = dmax ? *dmax : top + 2;
    json hs = json::array();
    for (std::size_t k = 0; k < kh.homology.size(); ++k) {
      const auto reg = regularity(res[k].betti);
      json h = {{"k", k}, {"zero", res[k].betti.empty()}, {"reg", reg_json(reg)}, {"betti", betti_json(res[k].betti)}};
      if (hi >= lo) h["hilbert"] = hilbert_json(hilbert_function(kh.homology[k], lo, hi));
      hs.push_back(std::move(h));
      human += "H_" + std::to_string(k) + ": " + (res[k].betti.empty() ? "0" : "reg " + reg_json(reg).dump()) + "\n";
    }
    out["homology"] = hs;
  } else {
    throw Failure{kParse, "unknown computation " + what};
  }
  write_output(out_path, text ? human : dump(out));
  return kOk;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::verified: return kOk;
    case Verdict::precondition_failed: return kPrecondition;
    case Verdict::violation: return kViolation;
  }
  return kSemantic;
}

int cmd_check(const std::string& input, const std::string& theorem_flag, std::optional<int> dmax_flag,
              const std::string& out_path) {
  CaseFile cf = load_case(input);
  std::optional<BoundKind> kind = cf.theorem;
  if (!theorem_flag.empty()) {
    kind = parse_bound_id(theorem_flag);
    if (!kind) throw Failure{kSemantic, "unknown theorem id " + theorem_flag};
  }
  if (!kind) throw Failure{kSemantic, "no theorem selected"};
  EvalOptions opts;
  opts.d_max = dmax_flag ? dmax_flag : cf.d_max;
  const CaseAnalysis analysis(cf.theorem_case);
  const BoundReport rep = evaluate_bound(analysis, *kind, opts);
  write_output(out_path, dump(report_json(rep, cf.theorem_case)));
  return verdict_exit(rep.verdict);
}

int cmd_fuzz(const std::string& family, std::uint64_t seed, int count, int max_vars, int max_deg,
             const std::string& out_path) {
  auto kind = parse_family(family);
  if (!kind) throw Failure{kSemantic, "unknown family " + family};
  std::vector<TheoremCase> cases;
  try {
    cases = generate_family({*kind, max_vars, max_deg, kDefaultCharacteristic}, seed, count);
  } catch (const GenerationError& e) {
    throw Failure{kGeneration, e.what()};
  } catch (const std::invalid_argument& e) {
    // Limits under which the family has no cases at all.
    throw Failure{kGeneration, e.what()};
  }
  json reports = json::array();
  std::int64_t verified = 0, vacuous = 0, violations = 0, failed = 0;
  for (const auto& c : cases) {
    const CaseAnalysis analysis(c);
    bool all_verified = true;
    for (auto k : c.theorems) {
      const BoundReport rep = evaluate_bound(analysis, k);
      for (const auto& r : rep.rows) vacuous += r.vacuous;
      violations += rep.verdict == Verdict::violation;
      failed += rep.verdict == Verdict::precondition_failed;
      all_verified = all_verified && rep.verdict == Verdict::verified;
      reports.push_back(report_json(rep, c));
    }
    verified += all_verified;
  }
  json out = {{"schema_version", kSchemaVersion},
              {"family", family},
              {"seed", seed},
              {"reports", std::move(reports)},
              {"summary",
               {{"cases", cases.size()},
                {"verified", verified},
                {"vacuous_rows", vacuous},
                {"violations", violations},
                {"precondition_failed", failed}}}};
  write_output(out_path, dump(out));
  return violations > 0 ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Castelnuovo-Mumford regularity of Koszul homology: computations and bound checks"};
  app.require_subcommand(1);

  std::string input, out_path, theorem, family, what;
  std::optional<int> dmax;
  bool text = false;
  std::uint64_t seed = 0;
  int count = 10, max_vars = 3, max_deg = 3;

  auto* compute = app.add_subcommand("compute", "Resolve, regularity, Koszul homology or Hilbert function");
  compute->add_option("what", what, "resolve | reg | koszul | hilbert")
      ->required()
      ->check(CLI::IsMember({"resolve", "reg", "koszul", "hilbert"}));
  compute->add_option("--input", input, "Case file (JSON)")->required();
  compute->add_option("--dmax", dmax, "Top degree for Hilbert functions");
  compute->add_flag("--text", text, "Human-readable summary instead of JSON");
  compute->add_option("--out", out_path, "Output file (default stdout)");

  auto* check = app.add_subcommand("check", "Evaluate a regularity bound on a case");
  check->add_option("--input", input, "Case file (JSON)")->required();
  check->add_option("--theorem", theorem, "thm12 | cor13 | cor43 | cor14 | thm15");
  check->add_option("--dmax", dmax, "Top degree of the oracle window");
  check->add_option("--out", out_path, "Output file (default stdout)");

  auto* fuzz = app.add_subcommand("fuzz", "Generate a family of cases and check every applicable bound");
  fuzz->add_option("--family", family, "ci | artinian-monomial | ci-plus-redundant | determinantal-cm | module-over-zero-dim")
      ->required();
  fuzz->add_option("--seed", seed, "Random seed");
  fuzz->add_option("--count", count, "Number of cases")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--max-vars", max_vars, "Largest number of variables");
  fuzz->add_option("--max-deg", max_deg, "Largest generator degree");
  fuzz->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    if (*compute) return cmd_compute(what, input, dmax, text, out_path);
    if (*check) return cmd_check(input, theorem, dmax, out_path);
    if (*fuzz) return cmd_fuzz(family, seed, count, max_vars, max_deg, out_path);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.msg << "\n";
    return f.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const GenerationError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kGeneration;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kSemantic;
}

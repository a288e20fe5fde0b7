// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "kreg/families.hpp"

using namespace kreg;
using namespace kreg::testing;

namespace {

// Pinned limits.
constexpr double kCiTightSeconds = 1.0;
constexpr double kRedundantTightSeconds = 2.0;
constexpr double kSweepSeconds = 600.0;
constexpr int kSweepMinCases = 200;
constexpr int kDualityMinCases = 25;
constexpr int kRegularSequencePairs = 10;
constexpr int kEulerWindowAbove = 3;  // degrees past reg M + pd checked by the Euler identity

struct SweepPart {
  FamilySpec spec;
  std::uint64_t seed;
  int count;
};

// Limits per family keep the whole sweep inside kSweepSeconds on one core;
// four-variable module-over-zero-dim cases stop at degree 3 (see README).
const std::vector<SweepPart> kSweep = {
    {{FamilyKind::ci, 4, 4}, 101, 50},
    {{FamilyKind::artinian_monomial, 4, 4}, 102, 50},
    {{FamilyKind::ci_plus_redundant, 4, 4}, 103, 40},
    {{FamilyKind::determinantal_cm, 4, 4}, 104, 40},
    {{FamilyKind::module_over_zero_dim, 3, 4}, 105, 40},
    {{FamilyKind::module_over_zero_dim, 4, 3}, 106, 20},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  failures += !o.pass;
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : std::string("-inf"); }

const BoundRow* find_row(const BoundReport& rep, int k) {
  for (const auto& r : rep.rows)
    if (r.k == k) return &r;
  return nullptr;
}

/// reg H_k and bound for one row must coincide.
Outcome exact_row(const TheoremCase& c, BoundKind kind, int k, int want) {
  CaseAnalysis a(c);
  auto rep = evaluate_bound(a, kind);
  const BoundRow* r = find_row(rep, k);
  Outcome o;
  if (!r) return {false, "no row " + std::to_string(k)};
  o.pass = r->reg == want && r->bound == want && r->slack == 0 && rep.verdict == Verdict::verified &&
           r->oracle_match == true;
  o.detail = std::string(bound_id(kind)) + " k=" + std::to_string(k) + " reg " + show(r->reg) + " bound " +
             show(r->bound) + " verdict " + std::string(verdict_name(rep.verdict));
  return o;
}

Outcome timed(double limit, const std::function<Outcome()>& f) {
  auto t0 = Clock::now();
  Outcome o = f();
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << o.detail << ", " << s << " s (limit " << limit << " s)";
  o.detail = os.str();
  o.pass = o.pass && s < limit;
  return o;
}

TheoremCase case_of(const Ring& r, const std::vector<std::string>& gens, std::optional<ModulePresentation> M = {}) {
  return TheoremCase{"witness", GeneratorList(r, polys(r, gens)), std::move(M), {}};
}

// ---------------------------------------------------------------------------
// Structural checks shared by the sweep.

bool minimal(const FreeComplex& C) {
  for (const auto& [i, d] : C.differentials)
    if (d.has_unit_entry()) return false;
  return true;
}

bool euler_identity(const Resolution& F, const ModulePresentation& M, int lo, int hi) {
  const auto hf = hilbert_function(M, lo, hi);
  for (int d = lo; d <= hi; ++d) {
    std::int64_t s = 0;
    for (const auto& [i, Fi] : F.complex.modules) s += (i % 2 == 0 ? 1 : -1) * Fi.dim_in_degree(M.nvars(), d);
    if (s != hf.at(d)) return false;
  }
  return true;
}

struct SelfCheck {
  int complexes = 0, bad_complexes = 0;
  int resolutions = 0, non_minimal = 0, euler_fail = 0;
  int bases = 0, bad_bases = 0;
  int finite_modules = 0, reg_mismatch = 0;

  void complex(const FreeComplex& C) {
    ++complexes;
    bad_complexes += !C.is_complex();
  }

  void resolution(const Resolution& F, const ModulePresentation& M) {
    complex(F.complex);
    ++resolutions;
    non_minimal += !minimal(F.complex);
    const int lo = M.generators.mindeg().value_or(0) - 1;
    const int hi = std::max(lo, regularity(F.betti).value_or(lo) + std::max(F.length(), 0) + kEulerWindowAbove);
    euler_fail += !euler_identity(F, M, lo, hi);
  }

  void basis(const GroebnerBasis& G) {
    ++bases;
    bad_bases += !all_s_pairs_reduce_to_zero(G);
  }

  void finite_length(const ModulePresentation& M, const ModuleInvariants& inv) {
    if (inv.is_zero || !inv.finite_length) return;
    ++finite_modules;
    const auto top = hilbert_function(M, *inv.mindeg, *inv.reg + 3).top_degree();
    reg_mismatch += top != inv.reg;
  }
};

struct SweepResult {
  int cases = 0;
  int reports = 0, violations = 0, precondition_failed = 0, vacuous_rows = 0, checked_rows = 0;
  int oracle_rows = 0, oracle_mismatch = 0;
  int duality_cases = 0, duality_fail = 0;
  double seconds = 0;
  SelfCheck self;
  std::vector<std::string> notes;
};

void sweep_case(const TheoremCase& c, SweepResult& out) {
  CaseAnalysis a(c);
  ++out.cases;
  bool dual_seen = false;
  for (auto kind : c.theorems) {
    auto rep = evaluate_bound(a, kind);
    ++out.reports;
    if (rep.verdict == Verdict::violation) {
      ++out.violations;
      out.notes.push_back("violation in " + c.id + " " + std::string(bound_id(kind)));
    }
    out.precondition_failed += rep.verdict == Verdict::precondition_failed;
    for (const auto& r : rep.rows) {
      out.vacuous_rows += r.vacuous;
      out.checked_rows += !r.vacuous && r.in_scope && r.slack.has_value();
      ++out.oracle_rows;
      if (r.oracle_match != true) {
        ++out.oracle_mismatch;
        out.notes.push_back("oracle mismatch in " + c.id + " k=" + std::to_string(r.k));
      }
    }
    if (rep.duality_checked.has_value()) {
      dual_seen = true;
      if (!*rep.duality_checked) {
        ++out.duality_fail;
        out.notes.push_back("duality failed in " + c.id);
      }
    }
  }
  out.duality_cases += dual_seen;

  // Self-checks on everything the analysis built.
  SelfCheck& s = out.self;
  const ModulePresentation SI = ModulePresentation::cyclic(c.ring(), c.generators.elements());
  s.basis(buchberger(c.ring(), c.generators.elements()));
  for (bool over_module : {false, true}) {
    if (over_module && !c.module) break;
    const auto& kh = a.koszul(over_module);
    const ModulePresentation base =
        over_module ? c.module_or_ring() : ModulePresentation::free(c.ring(), GradedFreeModule{{0}});
    s.complex(kh.koszul);
    s.complex(kh.total);
    s.resolution(kh.resolution, base);
    for (const auto& h : a.homology(over_module)) {
      s.resolution(h.resolution, h.module);
      s.finite_length(h.module, h.invariants);
      if (!h.module.generators.is_zero()) s.basis(buchberger(h.module.ring, h.module.generators, h.module.relations.columns));
    }
  }
  if (c.module) s.finite_length(*c.module, a.module_invariants());
  s.finite_length(SI, module_invariants(SI));
}

SweepResult run_sweep() {
  SweepResult out;
  auto t0 = Clock::now();
  for (const auto& part : kSweep)
    for (const auto& c : generate_family(part.spec, part.seed, part.count)) sweep_case(c, out);
  out.seconds = seconds_since(t0);
  return out;
}

// ---------------------------------------------------------------------------
// Regular linear quotients.

Outcome regular_sequence_pairs() {
  CaseRng rng(2024);
  std::vector<Ring> rings{ring_xyz(), ring_xyzw()};
  int pairs = 0, agree = 0, attempts = 0;
  std::ostringstream os;
  while (pairs < kRegularSequencePairs && attempts < 200) {
    ++attempts;
    const Ring& r = rings[static_cast<std::size_t>(rng.uniform(0, 1))];
    const int n = static_cast<int>(r->nvars());
    std::optional<ModulePresentation> M;
    switch (rng.uniform(0, 2)) {
      case 0: {  // complete intersection of positive dimension
        std::vector<Polynomial> f;
        for (int i = 0, c = static_cast<int>(rng.uniform(1, n - 1)); i < c; ++i)
          f.push_back(dense_form(r, static_cast<int>(rng.uniform(1, 3)), rng));
        M = ModulePresentation::cyclic(r, f);
        break;
      }
      case 1: {  // free module of rank 2
        M = ModulePresentation::free(r, {{0, static_cast<int>(rng.uniform(0, 2))}});
        break;
      }
      default: {  // one generic relation on two generators
        auto v = FreeVector::from_components(r, {dense_form(r, 2, rng), dense_form(r, 1, rng)});
        M = ModulePresentation::from_relations(r, {{0, 1}}, {v});
      }
    }
    const Polynomial u = dense_form(r, 1, rng);
    if (!is_nonzerodivisor(*M, u)) continue;
    ++pairs;
    const auto before = regularity(minimal_free_resolution(*M).betti);
    const auto after = regularity(minimal_free_resolution(quotient_by_linear_regular(*M, u)).betti);
    agree += before == after;
    os << " " << show(before) << "=" << show(after);
  }
  return {pairs == kRegularSequencePairs && agree == pairs,
          std::to_string(agree) + "/" + std::to_string(pairs) + " pairs keep reg;" + os.str()};
}

}  // namespace

int main() {
  auto r2 = ring_xy();

  report("ci_tightness_strongly_cm", timed(kCiTightSeconds, [&] {
           return exact_row(case_of(r2, {"x^2", "y^3"}), BoundKind::strongly_cm, 0, 3);
         }));

  report("redundant_tightness_zero_dim", timed(kRedundantTightSeconds, [&] {
           return exact_row(case_of(r2, {"x^2", "y^3", "x^3"}), BoundKind::zero_dim, 1, 6);
         }));

  {
    auto a = exact_row(case_of(r2, {"x"}, quotient(r2, {"y^3"})), BoundKind::perfect_module, 0, 2);
    auto b = exact_row(case_of(r2, {"x^2", "y^2"}, quotient(r2, {"x"})), BoundKind::zero_dim_module, 1, 3);
    report("perfect_and_module_witnesses", {a.pass && b.pass, a.detail + "; " + b.detail});
  }

  const SweepResult sw = run_sweep();
  {
    std::ostringstream os;
    os << sw.cases << " cases, " << sw.reports << " reports, " << sw.checked_rows << " checked rows, "
       << sw.vacuous_rows << " vacuous rows, " << sw.violations << " violations, " << sw.precondition_failed
       << " precondition_failed, " << sw.seconds << " s (limit " << kSweepSeconds << " s)";
    report("soundness_sweep",
           {sw.cases >= kSweepMinCases && sw.violations == 0 && sw.seconds < kSweepSeconds, os.str()});
  }
  report("oracle_equivalence", {sw.oracle_mismatch == 0 && sw.oracle_rows > 0,
                                std::to_string(sw.oracle_rows - sw.oracle_mismatch) + "/" +
                                    std::to_string(sw.oracle_rows) + " rows match the degreewise oracle"});
  report("finite_length_regularity",
         {sw.self.reg_mismatch == 0 && sw.self.finite_modules > 0,
          std::to_string(sw.self.finite_modules - sw.self.reg_mismatch) + "/" +
              std::to_string(sw.self.finite_modules) + " finite-length modules have reg = top degree"});
  report("duality", {sw.duality_fail == 0 && sw.duality_cases >= kDualityMinCases,
                     std::to_string(sw.duality_cases - sw.duality_fail) + "/" + std::to_string(sw.duality_cases) +
                         " finite-length cases agree (need " + std::to_string(kDualityMinCases) + ")"});
  {
    const auto& s = sw.self;
    std::ostringstream os;
    os << s.complexes - s.bad_complexes << "/" << s.complexes << " complexes with d^2 = 0, "
       << s.resolutions - s.non_minimal << "/" << s.resolutions << " minimal resolutions, "
       << s.resolutions - s.euler_fail << "/" << s.resolutions << " Euler identities, " << s.bases - s.bad_bases
       << "/" << s.bases << " Groebner bases with S-pairs reducing to 0";
    report("homological_self_checks",
           {s.bad_complexes == 0 && s.non_minimal == 0 && s.euler_fail == 0 && s.bad_bases == 0, os.str()});
  }
  report("regular_linear_quotient", regular_sequence_pairs());

  for (const auto& n : sw.notes) std::cout << "  note: " << n << "\n";
  return failures == 0 ? 0 : 1;
}

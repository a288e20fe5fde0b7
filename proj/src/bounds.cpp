#include "kreg/bounds.hpp"

#include <algorithm>

#include "kreg/errors.hpp"

namespace kreg {

std::string_view bound_id(BoundKind kind) {
  switch (kind) {
    case BoundKind::perfect_module: return "thm12";
    case BoundKind::strongly_cm: return "cor13";
    case BoundKind::zero_dim: return "cor43";
    case BoundKind::cm_quotient: return "cor14";
    case BoundKind::zero_dim_module: return "thm15";
  }
  return "?";
}

std::optional<BoundKind> parse_bound_id(std::string_view id) {
  for (auto k : kAllBoundKinds)
    if (bound_id(k) == id) return k;
  return std::nullopt;
}

bool uses_module(BoundKind kind) {
  return kind == BoundKind::perfect_module || kind == BoundKind::zero_dim_module;
}

ModulePresentation TheoremCase::module_or_ring() const {
  if (module) return *module;
  return ModulePresentation::free(ring(), GradedFreeModule{{0}});
}

void TheoremCase::validate() const {
  if (module) require_same_ring(ring(), module->ring);
  if (generators.size() == 0) throw std::invalid_argument("case has no generators");
}

bool preconditions_hold(BoundKind kind, const PreconditionFlags& f) {
  switch (kind) {
    case BoundKind::perfect_module: return f.is_perfect_of_grade && f.finite_colength;
    case BoundKind::strongly_cm: return f.is_strongly_CM;
    case BoundKind::zero_dim: return f.is_zero_dimensional;
    case BoundKind::cm_quotient: return f.is_CM_ideal;
    case BoundKind::zero_dim_module: return f.is_zero_dimensional;
  }
  return false;
}

namespace {

std::vector<HomologyData> homology_data(const KoszulHomology& kh) {
  std::vector<HomologyData> out;
  for (const auto& H : kh.homology) {
    Resolution R = minimal_free_resolution(H);
    ModuleInvariants inv = module_invariants(H, R);
    out.push_back({H, std::move(R), std::move(inv)});
  }
  return out;
}

bool all_nonzero_cm(const std::vector<HomologyData>& hs) {
  return std::all_of(hs.begin(), hs.end(),
                     [](const HomologyData& h) { return h.invariants.is_zero || h.invariants.is_cm; });
}

}  // namespace

CaseAnalysis::CaseAnalysis(TheoremCase c) : case_(std::move(c)) { case_.validate(); }

int CaseAnalysis::grade() const {
  if (!grade_) {
    const int d = dimension_of_quotient(case_.ring(), case_.generators.elements());
    grade_ = static_cast<int>(nvars()) - d;
  }
  return *grade_;
}

CaseAnalysis::Side& CaseAnalysis::side(bool over_module) const {
  return (over_module && case_.module) ? module_side_ : ring_side_;
}

const KoszulHomology& CaseAnalysis::koszul(bool over_module) const {
  Side& s = side(over_module);
  if (!s.koszul) {
    const bool use_module = over_module && case_.module;
    s.koszul = koszul_homology(case_.generators,
                               use_module ? *case_.module : ModulePresentation::free(case_.ring(), GradedFreeModule{{0}}));
  }
  return *s.koszul;
}

const std::vector<HomologyData>& CaseAnalysis::homology(bool over_module) const {
  Side& s = side(over_module);
  if (!s.homology) s.homology = homology_data(koszul(over_module));
  return *s.homology;
}

const std::vector<HilbertFunction>& CaseAnalysis::oracle(bool over_module, int d_min, int d_max) const {
  Side& s = side(over_module);
  // Any cached window with the same start and a higher end contains the answer.
  for (const auto& [key, hfs] : s.oracle) {
    if (key.first != d_min || key.second <= d_max) continue;
    auto& slice = s.oracle[{d_min, d_max}];
    for (const auto& hf : hfs) {
      HilbertFunction cut{d_min, {}};
      cut.values.assign(hf.values.begin(), hf.values.begin() + (d_max - d_min + 1));
      slice.push_back(std::move(cut));
    }
    return slice;
  }
  auto it = s.oracle.find({d_min, d_max});
  if (it == s.oracle.end()) {
    const bool use_module = over_module && case_.module;
    auto hf = koszul_homology_hilbert_oracle(
        case_.generators, use_module ? *case_.module : ModulePresentation::free(case_.ring(), GradedFreeModule{{0}}),
        d_min, d_max);
    it = s.oracle.emplace(std::make_pair(d_min, d_max), std::move(hf)).first;
  }
  return it->second;
}

const ModuleInvariants& CaseAnalysis::module_invariants() const {
  if (!module_inv_) module_inv_ = kreg::module_invariants(case_.module_or_ring(), koszul(true).resolution);
  return *module_inv_;
}

const PreconditionFlags& CaseAnalysis::preconditions() const {
  if (flags_) return *flags_;
  PreconditionFlags f;
  const int n = static_cast<int>(nvars());
  const int g = grade();
  const Ring& ring = case_.ring();
  const auto& gens = case_.generators.elements();

  f.is_zero_dimensional = (g == n);
  f.is_CM_ideal = homology(false).front().invariants.is_cm;

  if (f.is_zero_dimensional) {
    f.is_strongly_CM = true;
  } else {
    std::vector<FreeVector> vecs;
    for (const auto& p : gens) vecs.push_back(FreeVector::from_components(ring, {p}));
    auto idx = minimal_generator_indices(ring, GradedFreeModule{{0}}, vecs);
    if (idx.size() == gens.size()) {
      f.is_strongly_CM = all_nonzero_cm(homology(false));
    } else {
      std::vector<Polynomial> minimal;
      for (auto i : idx) minimal.push_back(gens[i]);
      auto kh = koszul_homology(GeneratorList(ring, std::move(minimal)),
                                ModulePresentation::free(ring, GradedFreeModule{{0}}));
      f.is_strongly_CM = all_nonzero_cm(homology_data(kh));
    }
  }

  const ModuleInvariants& mi = module_invariants();
  f.is_perfect_of_grade = !mi.is_zero && mi.pd == n - g && n - mi.dim == n - g;

  const ModulePresentation MI = quotient_by_ideal(case_.module_or_ring(), gens);
  const GroebnerBasis G = buchberger(ring, MI.generators, MI.relations.columns);
  f.finite_colength = quotient_dimension(G) <= 0;

  flags_ = f;
  return *flags_;
}

std::optional<int> bound_value(BoundKind kind, const GeneratorList& x, int n, int grade, const BettiTable& module_betti,
                               int k) {
  const int l = static_cast<int>(x.size());
  auto top = [&](int m) -> std::optional<int> {
    if (m < 0 || m > l) return std::nullopt;
    return x.top_degree_sum(static_cast<std::size_t>(m));
  };
  std::optional<int> sum, t;
  switch (kind) {
    case BoundKind::perfect_module:
      sum = top(grade + k);
      t = t_index(module_betti, n - grade);
      if (!sum || !t) return std::nullopt;
      return *sum + *t - n;
    case BoundKind::strongly_cm:
      sum = top(grade + k);
      if (!sum) return std::nullopt;
      return *sum - grade;
    case BoundKind::zero_dim:
      sum = top(n + k);
      if (!sum) return std::nullopt;
      return *sum - n;
    case BoundKind::cm_quotient:
      if (k != 0) return std::nullopt;
      sum = top(grade);
      if (!sum) return std::nullopt;
      return *sum - grade;
    case BoundKind::zero_dim_module:
      sum = top(n);
      t = t_index(module_betti, k);
      if (!sum || !t) return std::nullopt;
      return *sum + *t - n;
  }
  return std::nullopt;
}

namespace {

// Whether the sum in the bound stays within the l generators.
bool index_in_range(BoundKind kind, int l, int n, int grade, int k) {
  switch (kind) {
    case BoundKind::perfect_module:
    case BoundKind::strongly_cm: return grade + k <= l;
    case BoundKind::zero_dim: return n + k <= l;
    case BoundKind::cm_quotient: return k == 0 && grade <= l;
    case BoundKind::zero_dim_module: return n <= l;
  }
  return false;
}

}  // namespace

bool check_duality(const KoszulHomology& kh, const HomologyData& h, std::size_t n, int k) {
  if (!h.invariants.finite_length) throw PreconditionError("duality check needs a finite-length homology module");
  const int ni = static_cast<int>(n);
  const ModulePresentation dual_h = homology_at(dualize(kh.total), -(ni + k));
  if (h.invariants.is_zero) return is_zero_module(dual_h);

  const ModulePresentation E = ext_module(h.resolution, ni);
  const auto e_mindeg = E.generators.mindeg();
  if (!e_mindeg || -*e_mindeg - ni != *h.invariants.reg) return false;

  const int lo = -*h.invariants.reg - ni - 2;
  const int hi = -*h.invariants.mindeg - ni + 2;
  return hilbert_function(E, lo, hi) == hilbert_function(dual_h, lo, hi);
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::precondition_failed: return "precondition_failed";
    case Verdict::violation: return "VIOLATION";
  }
  return "?";
}

BoundReport evaluate_bound(const CaseAnalysis& analysis, BoundKind kind, const EvalOptions& opts) {
  const TheoremCase& c = analysis.theorem_case();
  const bool over_module = uses_module(kind);
  const auto& hs = analysis.homology(over_module);
  const int n = static_cast<int>(analysis.nvars());
  const int l = static_cast<int>(c.generators.size());
  const int g = analysis.grade();

  BoundReport rep;
  rep.case_id = c.id;
  rep.kind = kind;
  rep.flags = analysis.preconditions();

  const int codim = over_module ? n - analysis.module_invariants().dim : 0;
  const int k_max = kind == BoundKind::cm_quotient ? 0 : l;
  for (int k = 0; k <= k_max; ++k) {
    BoundRow row;
    row.k = k;
    const auto& inv = hs[static_cast<std::size_t>(k)].invariants;
    row.reg = inv.reg;
    row.bound = bound_value(kind, c.generators, n, g, analysis.module_betti(), k);
    row.vacuous = inv.is_zero || !index_in_range(kind, l, n, g, k);
    row.in_scope = kind != BoundKind::zero_dim_module || k <= codim;
    if (!row.vacuous && row.bound && row.reg) row.slack = *row.bound - *row.reg;
    rep.rows.push_back(row);
  }

  const ModulePresentation side_module =
      over_module ? c.module_or_ring() : ModulePresentation::free(c.ring(), GradedFreeModule{{0}});
  rep.oracle_d_min = side_module.generators.mindeg().value_or(0);
  if (opts.d_max) {
    rep.oracle_d_max = *opts.d_max;
  } else {
    int top = rep.oracle_d_min;
    for (const auto& r : rep.rows) {
      if (r.bound) top = std::max(top, *r.bound);
      if (r.reg) top = std::max(top, *r.reg);
    }
    rep.oracle_d_max = top + 2;
  }
  if (opts.oracle && rep.oracle_d_max >= rep.oracle_d_min) {
    const auto& oracle = analysis.oracle(over_module, rep.oracle_d_min, rep.oracle_d_max);
    for (auto& r : rep.rows) {
      const auto& H = hs[static_cast<std::size_t>(r.k)].module;
      r.oracle_match = hilbert_function(H, rep.oracle_d_min, rep.oracle_d_max) == oracle[static_cast<std::size_t>(r.k)];
    }
  }

  const bool all_finite =
      std::all_of(hs.begin(), hs.end(), [](const HomologyData& h) { return h.invariants.finite_length; });
  if (opts.duality && all_finite) {
    bool ok = true;
    for (std::size_t k = 0; k < hs.size() && ok; ++k)
      ok = check_duality(analysis.koszul(over_module), hs[k], analysis.nvars(), static_cast<int>(k));
    rep.duality_checked = ok;
  }

  if (!preconditions_hold(kind, rep.flags)) {
    rep.verdict = Verdict::precondition_failed;
  } else if (std::any_of(rep.rows.begin(), rep.rows.end(),
                         [](const BoundRow& r) { return !r.vacuous && r.in_scope && r.slack && *r.slack < 0; })) {
    rep.verdict = Verdict::violation;
  } else {
    rep.verdict = Verdict::verified;
  }
  return rep;
}

}  // namespace kreg

#include "kreg/families.hpp"

#include <algorithm>
#include <string>

namespace kreg {

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ci: return "ci";
    case FamilyKind::artinian_monomial: return "artinian-monomial";
    case FamilyKind::ci_plus_redundant: return "ci-plus-redundant";
    case FamilyKind::determinantal_cm: return "determinantal-cm";
    case FamilyKind::module_over_zero_dim: return "module-over-zero-dim";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (auto k : kAllFamilies)
    if (family_name(k) == name) return k;
  return std::nullopt;
}

std::int64_t CaseRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = engine_.max() - (engine_.max() % range + 1) % range;
  std::uint64_t v;
  do v = engine_();
  while (v > limit);
  return lo + static_cast<std::int64_t>(v % range);
}

Polynomial dense_form(const Ring& ring, int d, CaseRng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(ring->nvars(), d)) terms.push_back({m, rng.nonzero(ring->field())});
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

const std::vector<std::string> kVarNames = {"x", "y", "z", "w", "t", "u", "v", "s"};

Ring ring_with(const FamilySpec& spec, int n) {
  return make_ring(spec.characteristic, std::vector<std::string>(kVarNames.begin(), kVarNames.begin() + n));
}

Monomial random_monomial(std::size_t nvars, int d, CaseRng& rng) {
  Monomial m(nvars);
  for (int i = 0; i < d; ++i) m = m * Monomial::variable(nvars, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nvars) - 1)));
  return m;
}

template <class Draw>
auto with_retries(Draw draw, std::string_view family) {
  for (int attempt = 0; attempt < kMaxRetries; ++attempt)
    if (auto r = draw()) return std::move(*r);
  throw GenerationError(std::string(family) + ": retry limit exceeded");
}

std::vector<Polynomial> random_ci(const Ring& ring, int lo_deg, int hi_deg, CaseRng& rng) {
  return with_retries(
      [&]() -> std::optional<std::vector<Polynomial>> {
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < ring->nvars(); ++i)
          gens.push_back(dense_form(ring, static_cast<int>(rng.uniform(lo_deg, hi_deg)), rng));
        if (dimension_of_quotient(ring, gens) != 0) return std::nullopt;
        return gens;
      },
      "ci");
}

const std::vector<BoundKind> kEveryBound(kAllBoundKinds.begin(), kAllBoundKinds.end());

TheoremCase make_ci(const FamilySpec& spec, CaseRng& rng) {
  const int n = static_cast<int>(rng.uniform(2, spec.max_vars));
  Ring ring = ring_with(spec, n);
  return {"", GeneratorList(ring, random_ci(ring, 1, spec.max_deg, rng)), std::nullopt, kEveryBound};
}

TheoremCase make_artinian_monomial(const FamilySpec& spec, CaseRng& rng) {
  const int n = static_cast<int>(rng.uniform(2, spec.max_vars));
  Ring ring = ring_with(spec, n);
  std::vector<Polynomial> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform(1, spec.max_deg));
    gens.push_back(Polynomial::monomial(ring, Monomial(ring->nvars(), e)));
  }
  const int extra = static_cast<int>(rng.uniform(0, 2));
  for (int i = 0; i < extra; ++i) {
    const int d = static_cast<int>(rng.uniform(2, std::max(2, spec.max_deg)));
    gens.push_back(Polynomial::monomial(ring, random_monomial(ring->nvars(), d, rng)));
  }
  return {"", GeneratorList(ring, std::move(gens)), std::nullopt, kEveryBound};
}

TheoremCase make_ci_plus_redundant(const FamilySpec& spec, CaseRng& rng) {
  if (spec.max_deg < 2) throw std::invalid_argument("ci-plus-redundant needs max_deg >= 2");
  const int n = static_cast<int>(rng.uniform(2, spec.max_vars));
  Ring ring = ring_with(spec, n);
  std::vector<Polynomial> gens = random_ci(ring, 1, spec.max_deg - 1, rng);
  int low = spec.max_deg;
  for (const auto& g : gens) low = std::min(low, *g.homogeneous_degree());
  const int extra = static_cast<int>(rng.uniform(1, 2));
  std::vector<Polynomial> added;
  for (int r = 0; r < extra; ++r) {
    added.push_back(with_retries(
        [&]() -> std::optional<Polynomial> {
          // Σ h_i x_i over the base generators of degree <= e.
          const int e = static_cast<int>(rng.uniform(low, spec.max_deg));
          Polynomial sum = Polynomial::constant(ring, 0);
          for (const auto& g : gens) {
            const int gd = *g.homogeneous_degree();
            if (gd > e) continue;
            sum += g * dense_form(ring, e - gd, rng);
          }
          if (sum.is_zero()) return std::nullopt;
          return sum;
        },
        "ci-plus-redundant"));
  }
  gens.insert(gens.end(), added.begin(), added.end());
  return {"", GeneratorList(ring, std::move(gens)), std::nullopt, kEveryBound};
}

TheoremCase make_determinantal(const FamilySpec& spec, CaseRng& rng) {
  if (spec.max_deg < 2) throw std::invalid_argument("determinantal-cm needs max_deg >= 2");
  Ring ring = ring_with(spec, 4);
  const int e = static_cast<int>(rng.uniform(1, std::min(2, spec.max_deg - 1)));
  auto minors = with_retries(
      [&]() -> std::optional<std::vector<Polynomial>> {
        std::vector<Polynomial> top, bottom;
        for (int j = 0; j < 3; ++j) top.push_back(dense_form(ring, 1, rng));
        for (int j = 0; j < 3; ++j) bottom.push_back(dense_form(ring, e, rng));
        std::vector<Polynomial> out;
        for (int a = 0; a < 3; ++a)
          for (int b = a + 1; b < 3; ++b) {
            Polynomial m = top[a] * bottom[b] - top[b] * bottom[a];
            if (m.is_zero()) return std::nullopt;
            out.push_back(std::move(m));
          }
        if (dimension_of_quotient(ring, out) != 2) return std::nullopt;
        return out;
      },
      "determinantal-cm");
  auto linear = with_retries(
      [&]() -> std::optional<std::vector<Polynomial>> {
        std::vector<Polynomial> ls = {dense_form(ring, 1, rng), dense_form(ring, 1, rng)};
        std::vector<Polynomial> all = minors;
        all.insert(all.end(), ls.begin(), ls.end());
        if (dimension_of_quotient(ring, all) != 0) return std::nullopt;
        return ls;
      },
      "determinantal-cm");
  return {"", GeneratorList(ring, std::move(minors)), ModulePresentation::cyclic(ring, linear),
          {BoundKind::cm_quotient, BoundKind::strongly_cm, BoundKind::perfect_module}};
}

TheoremCase make_module_over_zero_dim(const FamilySpec& spec, CaseRng& rng) {
  const int n = static_cast<int>(rng.uniform(2, spec.max_vars));
  Ring ring = ring_with(spec, n);
  auto gens = random_ci(ring, 1, spec.max_deg, rng);
  GradedFreeModule F0;
  const int rank = static_cast<int>(rng.uniform(1, 2));
  for (int i = 0; i < rank; ++i) F0.twists.push_back(static_cast<int>(rng.uniform(0, 1)));
  const int top = *std::max_element(F0.twists.begin(), F0.twists.end());
  std::vector<FreeVector> rels;
  const int nrel = static_cast<int>(rng.uniform(1, 3));
  for (int j = 0; j < nrel; ++j) {
    const int c = static_cast<int>(rng.uniform(top + 1, top + 2));
    std::vector<Polynomial> col;
    for (int t : F0.twists) col.push_back(dense_form(ring, c - t, rng));
    rels.push_back(FreeVector::from_components(ring, col));
  }
  return {"", GeneratorList(ring, std::move(gens)), ModulePresentation::from_relations(ring, F0, rels),
          {BoundKind::zero_dim_module}};
}

}  // namespace

std::vector<TheoremCase> generate_family(const FamilySpec& spec, std::uint64_t seed, int count) {
  if (count < 0) throw std::invalid_argument("negative case count");
  if (spec.max_deg < 1) throw std::invalid_argument("max_deg must be at least 1");
  if (spec.kind != FamilyKind::determinantal_cm &&
      (spec.max_vars < 2 || spec.max_vars > static_cast<int>(kVarNames.size())))
    throw std::invalid_argument("max_vars must lie in [2, 8]");
  CaseRng rng(seed);
  std::vector<TheoremCase> out;
  for (int i = 0; i < count; ++i) {
    TheoremCase c = [&] {
      switch (spec.kind) {
        case FamilyKind::ci: return make_ci(spec, rng);
        case FamilyKind::artinian_monomial: return make_artinian_monomial(spec, rng);
        case FamilyKind::ci_plus_redundant: return make_ci_plus_redundant(spec, rng);
        case FamilyKind::determinantal_cm: return make_determinantal(spec, rng);
        case FamilyKind::module_over_zero_dim: return make_module_over_zero_dim(spec, rng);
      }
      throw std::logic_error("unknown family");
    }();
    c.id = std::string(family_name(spec.kind)) + "-" + std::to_string(seed) + "-" + std::to_string(i);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace kreg

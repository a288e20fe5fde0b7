#include "kreg/groebner.hpp"

#include <algorithm>
#include <bit>

#include "gb_engine.hpp"
#include "kreg/degreewise.hpp"

namespace kreg {

namespace {

detail::TermVec to_terms(const FreeVector& v, std::size_t comp_offset = 0) {
  detail::TermVec out;
  out.reserve(v.terms().size());
  for (const auto& t : v.terms()) out.push_back({t.mono, static_cast<std::uint32_t>(t.comp + comp_offset), t.coeff});
  return out;
}

int checked_degree(const FreeVector& v, const GradedFreeModule& ambient) {
  auto d = v.degree_in(ambient);
  if (!d) throw std::invalid_argument("zero vector has no degree");
  return *d;
}

std::vector<detail::GbElement> basis_elements(const GroebnerBasis& G) {
  std::vector<detail::GbElement> out;
  out.reserve(G.generators.size());
  for (const auto& g : G.generators) {
    const int d = checked_degree(g, G.ambient);
    out.push_back({to_terms(g), d});
  }
  return out;
}

}  // namespace

std::vector<VecTerm> GroebnerBasis::leading_terms() const {
  std::vector<VecTerm> out;
  for (const auto& g : generators) out.push_back(g.terms().front());
  return out;
}

FreeVector normal_form(const FreeVector& v, const GroebnerBasis& G) {
  require_same_ring(v.ring(), G.ring);
  if (v.rank() != G.ambient.rank()) throw std::invalid_argument("vector and basis live in different modules");
  auto order = detail::ModuleOrder::top(G.ambient.rank());
  auto r = detail::reduce_fully(G.ring->field(), order, to_terms(v), basis_elements(G));
  return FreeVector::from_terms(G.ring, G.ambient.rank(), std::move(r));
}

GroebnerBasis buchberger(const Ring& ring, const GradedFreeModule& ambient, const std::vector<FreeVector>& gens) {
  std::vector<detail::GbElement> inputs;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.is_zero()) continue;
    const int d = checked_degree(g, ambient);
    inputs.push_back({to_terms(g), d});
  }
  detail::GbConfig cfg;
  cfg.twists = ambient.twists;
  cfg.order = detail::ModuleOrder::top(ambient.rank());
  cfg.image_rank = ambient.rank();
  cfg.product_criterion = ambient.rank() == 1;
  cfg.interreduce = true;
  auto res = detail::run_buchberger(ring->field(), cfg, std::move(inputs));
  GroebnerBasis G{ring, ambient, {}, true};
  for (auto& e : res.basis) G.generators.push_back(FreeVector::from_terms(ring, ambient.rank(), std::move(e.v)));
  return G;
}

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& ideal) {
  std::vector<FreeVector> gens;
  for (const auto& f : ideal) gens.push_back(FreeVector::from_components(ring, {f}));
  return buchberger(ring, GradedFreeModule{{0}}, gens);
}

bool all_s_pairs_reduce_to_zero(const GroebnerBasis& G) {
  auto order = detail::ModuleOrder::top(G.ambient.rank());
  auto elems = basis_elements(G);
  const auto& F = G.ring->field();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (elems[i].v.front().comp != elems[j].v.front().comp) continue;
      if (elems[i].v.front().coeff != 1 || elems[j].v.front().coeff != 1) return false;
      auto s = detail::s_vector(F, order, elems[i], elems[j]);
      if (!detail::reduce_fully(F, order, std::move(s), elems).empty()) return false;
    }
  return true;
}

std::vector<std::size_t> minimal_generator_indices(const Ring& ring, const GradedFreeModule& ambient,
                                                   const std::vector<FreeVector>& gens) {
  std::vector<detail::GbElement> inputs;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_ring(ring, gens[i].ring());
    if (gens[i].is_zero()) continue;
    const int d = checked_degree(gens[i], ambient);
    inputs.push_back({to_terms(gens[i]), d});
    origin.push_back(i);
  }
  std::vector<int> degrees;
  for (const auto& in : inputs) degrees.push_back(in.degree);
  detail::GbConfig cfg;
  cfg.twists = ambient.twists;
  cfg.order = detail::ModuleOrder::top(ambient.rank());
  cfg.image_rank = ambient.rank();
  cfg.product_criterion = ambient.rank() == 1;
  // Membership of an input only depends on the basis up to its own degree.
  cfg.max_degree = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  auto res = detail::run_buchberger(ring->field(), cfg, std::move(inputs));
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < origin.size(); ++k)
    if (res.input_minimal[k]) keep.push_back(k);
  std::stable_sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });
  for (auto& k : keep) k = origin[k];
  return keep;
}

GradedMap syzygy_generators(const GradedMap& m) { return syzygies_modulo(m, {}); }

GradedMap syzygies_modulo(const GradedMap& m, const std::vector<FreeVector>& modulo) {
  m.validate();
  const std::size_t r0 = m.target.rank();
  const std::size_t r1 = m.source.rank();
  if (r1 == 0) return GradedMap{{}, m.source, {}};
  const Ring& ring = m.columns.front().ring();

  detail::GbConfig cfg;
  cfg.twists = m.target.twists;
  cfg.twists.insert(cfg.twists.end(), m.source.twists.begin(), m.source.twists.end());
  cfg.order.block.assign(r0, 1);
  cfg.order.block.resize(r0 + r1, 0);
  cfg.image_rank = r0;

  std::vector<detail::GbElement> inputs;
  inputs.reserve(r1);
  for (std::size_t j = 0; j < r1; ++j) {
    auto v = to_terms(m.columns[j]);
    v.push_back({Monomial(ring->nvars()), static_cast<std::uint32_t>(r0 + j), 1});
    inputs.push_back({std::move(v), m.source.twists[j]});
  }
  for (const auto& u : modulo) {
    if (u.is_zero()) continue;
    if (u.rank() != r0) throw std::invalid_argument("syzygies_modulo: submodule generator has the wrong rank");
    const int d = checked_degree(u, m.target);
    inputs.push_back({to_terms(u), d});
  }
  auto res = detail::run_buchberger(ring->field(), cfg, std::move(inputs));

  std::vector<FreeVector> kernel;
  kernel.reserve(res.kernel.size());
  for (auto& e : res.kernel) {
    for (auto& t : e.v) t.comp -= static_cast<std::uint32_t>(r0);
    kernel.push_back(FreeVector::from_terms(ring, r1, std::move(e.v)));
  }
  GradedMap out{{}, m.source, {}};
  for (std::size_t k : minimal_generator_indices(ring, m.source, kernel)) {
    out.source.twists.push_back(checked_degree(kernel[k], m.source));
    out.columns.push_back(kernel[k]);
  }
  return out;
}

int monomial_quotient_dimension(std::size_t nvars, const std::vector<Monomial>& gens) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    if (g.is_one()) return -1;
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i] > 0) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (independent) best = size;
  }
  return best;
}

int dimension_of_quotient(const Ring& ring, const std::vector<Polynomial>& ideal) {
  for (const auto& f : ideal)
    if (!f.is_zero() && !f.homogeneous_degree()) throw NotHomogeneous("ideal generator " + f.to_string() + " is not homogeneous");
  return quotient_dimension(buchberger(ring, ideal));
}

int quotient_dimension(const GroebnerBasis& G) {
  int best = -1;
  const std::size_t n = G.ring->nvars();
  for (std::size_t i = 0; i < G.ambient.rank(); ++i) {
    std::vector<Monomial> leads;
    for (const auto& g : G.generators)
      if (g.terms().front().comp == i) leads.push_back(g.terms().front().mono);
    best = std::max(best, monomial_quotient_dimension(n, leads));
  }
  return best;
}

std::int64_t HilbertFunction::at(int d) const noexcept {
  if (d < d_min || d > d_max()) return 0;
  return values[static_cast<std::size_t>(d - d_min)];
}

std::int64_t HilbertFunction::total() const noexcept {
  std::int64_t s = 0;
  for (auto v : values) s += v;
  return s;
}

std::optional<int> HilbertFunction::top_degree() const noexcept {
  for (std::size_t k = values.size(); k-- > 0;)
    if (values[k] != 0) return d_min + static_cast<int>(k);
  return std::nullopt;
}

std::optional<int> HilbertFunction::bottom_degree() const noexcept {
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] != 0) return d_min + static_cast<int>(k);
  return std::nullopt;
}

HilbertFunction hilbert_function(const ModulePresentation& M, int d_min, int d_max) {
  return hilbert_function(M, d_min, d_max, simd::best_isa(M.ring->characteristic()));
}

HilbertFunction hilbert_function(const ModulePresentation& M, int d_min, int d_max, simd::Isa isa) {
  if (d_min > d_max) throw std::invalid_argument("empty degree window");
  HilbertFunction hf{d_min, {}};
  for (int d = d_min; d <= d_max; ++d) hf.values.push_back(static_cast<std::int64_t>(QuotientPiece(M, d, isa).dim()));
  return hf;
}

HilbertFunction standard_monomial_count(const GroebnerBasis& G, int d_min, int d_max) {
  const std::size_t n = G.ring->nvars();
  auto leads = G.leading_terms();
  HilbertFunction hf{d_min, {}};
  for (int d = d_min; d <= d_max; ++d) {
    std::int64_t count = 0;
    for (std::size_t i = 0; i < G.ambient.rank(); ++i)
      for (const auto& m : monomials_of_degree(n, d - G.ambient.twists[i])) {
        bool standard = std::none_of(leads.begin(), leads.end(),
                                     [&](const VecTerm& l) { return l.comp == i && l.mono.divides(m); });
        if (standard) ++count;
      }
    hf.values.push_back(count);
  }
  return hf;
}

}  // namespace kreg

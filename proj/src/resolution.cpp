#include "kreg/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "kreg/errors.hpp"

namespace kreg {

BettiTable BettiTable::from_complex(const FreeComplex& F) {
  BettiTable B;
  for (const auto& [i, mod] : F.modules)
    for (int a : mod.twists) ++B.entries[{i, a}];
  return B;
}

int BettiTable::length() const noexcept {
  int len = -1;
  for (const auto& [key, b] : entries)
    if (b != 0) len = std::max(len, key.first);
  return len;
}

std::optional<int> regularity(const BettiTable& B) {
  std::optional<int> reg;
  for (const auto& [key, b] : B.entries) {
    if (b == 0) continue;
    int v = key.second - key.first;
    if (!reg || v > *reg) reg = v;
  }
  return reg;
}

std::optional<int> t_index(const BettiTable& B, int i) {
  std::optional<int> t;
  for (const auto& [key, b] : B.entries)
    if (key.first == i && b != 0 && (!t || key.second > *t)) t = key.second;
  return t;
}

namespace {

// Remove generator `row` (a unit pivot in column `col`) by column operations.
void eliminate_unit(std::vector<FreeVector>& cols, std::vector<int>& rel_twists, GradedFreeModule& gens,
                    std::size_t row, std::size_t col, const Ring& ring) {
  const auto& F = ring->field();
  const FreeVector pivot = cols[col];
  const Coeff inv = F.inv(pivot.component(row).constant_coeff());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k == col) continue;
    Polynomial f = cols[k].component(row);
    if (f.is_zero()) continue;
    cols[k] -= pivot.times(f.scaled(inv));
  }
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(col));
  rel_twists.erase(rel_twists.begin() + static_cast<std::ptrdiff_t>(col));
  std::vector<int> remap(gens.rank());
  for (std::size_t i = 0; i < gens.rank(); ++i)
    remap[i] = i < row ? static_cast<int>(i) : (i == row ? -1 : static_cast<int>(i) - 1);
  for (auto& c : cols) c = c.remapped(remap, gens.rank() - 1);
  gens.twists.erase(gens.twists.begin() + static_cast<std::ptrdiff_t>(row));
}

ModulePresentation zero_presentation(const Ring& ring) { return ModulePresentation::free(ring, {}); }

}  // namespace

ModulePresentation minimalize(const ModulePresentation& M) {
  GradedFreeModule gens = M.generators;
  std::vector<FreeVector> cols = M.relations.columns;
  std::vector<int> twists = M.relations.source.twists;
  for (;;) {
    bool found = false;
    for (std::size_t j = 0; j < cols.size() && !found; ++j)
      for (const auto& t : cols[j].terms())
        if (t.mono.is_one()) {
          eliminate_unit(cols, twists, gens, t.comp, j, M.ring);
          found = true;
          break;
        }
    if (!found) break;
  }
  std::vector<FreeVector> nonzero;
  for (auto& c : cols)
    if (!c.is_zero()) nonzero.push_back(std::move(c));
  std::vector<FreeVector> minimal;
  for (std::size_t k : minimal_generator_indices(M.ring, gens, nonzero)) minimal.push_back(nonzero[k]);
  return ModulePresentation::from_relations(M.ring, std::move(gens), minimal);
}

bool is_zero_module(const ModulePresentation& M) { return minimalize(M).generators.is_zero(); }

Resolution minimal_free_resolution(const ModulePresentation& M) {
  ModulePresentation P = minimalize(M);
  Resolution R;
  R.complex.ring = M.ring;
  if (P.generators.is_zero()) return R;
  R.complex.modules[0] = P.generators;
  GradedMap d = P.relations;
  int i = 1;
  const int limit = static_cast<int>(M.nvars()) + 1;
  while (!d.source.is_zero()) {
    if (i > limit) throw std::logic_error("resolution longer than the number of variables");
    R.complex.modules[i] = d.source;
    GradedMap next = syzygy_generators(d);
    R.complex.differentials.emplace(i, std::move(d));
    d = std::move(next);
    ++i;
  }
  R.betti = BettiTable::from_complex(R.complex);
  return R;
}

ModulePresentation homology_at(const FreeComplex& C, int i) {
  const GradedFreeModule Ci = C.module(i);
  if (Ci.is_zero()) return zero_presentation(C.ring);
  const GradedMap di = C.differential(i);
  const GradedMap dnext = C.differential(i + 1);
  if (!Ci.is_zero() && !C.module(i - 1).is_zero()) {
    for (const auto& col : compose(di, dnext).columns)
      if (!col.is_zero()) throw std::logic_error("homology_at: d_i ∘ d_{i+1} != 0 at index " + std::to_string(i));
  }
  const GradedMap Z = syzygy_generators(di);
  if (Z.source.is_zero()) return zero_presentation(C.ring);

  const GradedMap rel = syzygies_modulo(Z, dnext.columns);
  return minimalize(ModulePresentation::from_relations(C.ring, Z.source, rel.columns));
}

FreeComplex dualize(const FreeComplex& C) {
  FreeComplex D;
  D.ring = C.ring;
  for (const auto& [i, mod] : C.modules) D.modules[-i] = mod.dual();
  for (const auto& [i, d] : C.differentials) {
    // d : C_i -> C_{i-1} becomes C_{i-1}^* -> C_i^*, stored at index -(i-1).
    GradedMap t{d.target.dual(), d.source.dual(), {}};
    std::vector<std::vector<VecTerm>> cols(d.target.rank());
    for (std::size_t c = 0; c < d.columns.size(); ++c)
      for (const auto& term : d.columns[c].terms())
        cols[term.comp].push_back({term.mono, static_cast<std::uint32_t>(c), term.coeff});
    for (auto& terms : cols) t.columns.push_back(FreeVector::from_terms(C.ring, d.source.rank(), std::move(terms)));
    D.differentials.emplace(-(i - 1), std::move(t));
  }
  return D;
}

ModulePresentation ext_module(const Resolution& F, int p) {
  if (p < 0) throw std::invalid_argument("Ext index must be nonnegative");
  return homology_at(dualize(F.complex), -p);
}

ModulePresentation ext_module(const ModulePresentation& M, int p) { return ext_module(minimal_free_resolution(M), p); }

ModuleInvariants module_invariants(const ModulePresentation& M) {
  return module_invariants(M, minimal_free_resolution(M));
}

ModuleInvariants module_invariants(const ModulePresentation& M, const Resolution& F) {
  const int n = static_cast<int>(M.nvars());
  ModuleInvariants inv;
  if (F.complex.module(0).is_zero()) {
    inv.dim = -1;
    inv.pd = -1;
    inv.depth = n + 1;
    inv.grade_codim = n + 1;
    inv.finite_length = true;
    inv.length = 0;
    return inv;
  }
  inv.is_zero = false;
  inv.pd = F.length();
  inv.depth = n - inv.pd;
  const GradedFreeModule& F0 = F.complex.modules.at(0);
  const GradedMap d1 = F.complex.differential(1);
  inv.dim = quotient_dimension(buchberger(M.ring, F0, d1.columns));
  inv.grade_codim = n - inv.dim;
  inv.is_cm = inv.dim == inv.depth;
  inv.is_perfect = inv.pd == inv.grade_codim;
  inv.finite_length = inv.dim <= 0;
  inv.mindeg = F0.mindeg();
  inv.reg = regularity(F.betti);
  if (inv.finite_length) {
    ModulePresentation P(M.ring, F0, d1);
    inv.length = hilbert_function(P, *inv.mindeg, std::max(*inv.reg, *inv.mindeg)).total();
  }
  return inv;
}

namespace {

Polynomial determinant(std::vector<std::vector<Polynomial>> a, const Ring& ring) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return a[0][0];
  Polynomial det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = a[0][c] * determinant(std::move(minor), ring);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace

std::vector<Polynomial> zeroth_fitting_ideal(const ModulePresentation& M) {
  const std::size_t r0 = M.generators.rank();
  const std::size_t r1 = M.relations.source.rank();
  std::vector<Polynomial> out;
  if (r0 == 0) {
    out.push_back(Polynomial::constant(M.ring, 1));
    return out;
  }
  if (r1 < r0) return out;
  std::vector<bool> pick(r1, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r0), true);
  do {
    std::vector<std::vector<Polynomial>> a(r0);
    for (std::size_t i = 0; i < r0; ++i)
      for (std::size_t j = 0; j < r1; ++j)
        if (pick[j]) a[i].push_back(M.relations.entry(i, j));
    Polynomial det = determinant(std::move(a), M.ring);
    if (!det.is_zero()) out.push_back(std::move(det));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::optional<int> regularity_finite_length_oracle(const ModulePresentation& M, int d_cap) {
  const ModulePresentation P = minimalize(M);
  if (P.generators.is_zero()) return std::nullopt;
  if (quotient_dimension(buchberger(P.ring, P.generators, P.relations.columns)) > 0)
    throw PreconditionError("module does not have finite length");
  const int lo = *P.generators.mindeg();
  if (d_cap < lo) return std::nullopt;
  return hilbert_function(P, lo, d_cap).top_degree();
}

bool is_nonzerodivisor(const ModulePresentation& M, const Polynomial& u) {
  require_same_ring(M.ring, u.ring());
  if (u.is_zero()) return M.generators.is_zero() || is_zero_module(M);
  auto du = u.homogeneous_degree();
  if (!du) throw NotHomogeneous("multiplier is not homogeneous");
  const std::size_t r0 = M.generators.rank();
  GradedMap joint{{}, M.generators, {}};
  for (std::size_t i = 0; i < r0; ++i) {
    joint.source.twists.push_back(M.generators.twists[i] + *du);
    joint.columns.push_back(FreeVector::basis(M.ring, r0, i).times(u));
  }
  joint.source.twists.insert(joint.source.twists.end(), M.relations.source.twists.begin(),
                             M.relations.source.twists.end());
  joint.columns.insert(joint.columns.end(), M.relations.columns.begin(), M.relations.columns.end());
  const GradedMap syz = syzygy_generators(joint);
  const GroebnerBasis image = buchberger(M.ring, M.generators, M.relations.columns);
  std::vector<int> project(joint.source.rank(), -1);
  std::iota(project.begin(), project.begin() + static_cast<std::ptrdiff_t>(r0), 0);
  for (const auto& col : syz.columns) {
    FreeVector alpha = col.remapped(project, r0);
    if (!normal_form(alpha, image).is_zero()) return false;
  }
  return true;
}

ModulePresentation quotient_by_linear_regular(const ModulePresentation& M, const Polynomial& u) {
  if (u.is_zero() || u.homogeneous_degree() != 1) throw std::invalid_argument("expected a nonzero linear form");
  if (!is_nonzerodivisor(M, u)) throw PreconditionError("linear form " + u.to_string() + " is a zerodivisor on M");
  return quotient_by_ideal(M, {u});
}

ModulePresentation quotient_by_ideal(const ModulePresentation& M, const std::vector<Polynomial>& ideal) {
  std::vector<FreeVector> rel = M.relations.columns;
  const std::size_t r0 = M.generators.rank();
  for (const auto& f : ideal) {
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < r0; ++i) rel.push_back(FreeVector::basis(M.ring, r0, i).times(f));
  }
  return minimalize(ModulePresentation::from_relations(M.ring, M.generators, rel));
}

}  // namespace kreg

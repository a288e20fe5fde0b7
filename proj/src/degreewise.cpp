#include "kreg/degreewise.hpp"

namespace kreg {

PieceBasis::PieceBasis(std::size_t nvars, const GradedFreeModule& F, int d) : degree_(d) {
  for (std::size_t i = 0; i < F.rank(); ++i) {
    for (const auto& m : monomials_of_degree(nvars, d - F.twists[i])) {
      index_.emplace(Key{static_cast<std::uint32_t>(i), m}, elements_.size());
      elements_.push_back({m, static_cast<std::uint32_t>(i), 1});
    }
  }
}

std::optional<std::size_t> PieceBasis::index_of(std::uint32_t comp, const Monomial& m) const {
  auto it = index_.find(Key{comp, m});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Coeff> PieceBasis::coordinates(std::span<const VecTerm> terms, const PrimeField& field) const {
  std::vector<Coeff> out(elements_.size(), 0);
  for (const auto& t : terms) {
    auto k = index_of(t.comp, t.mono);
    if (!k) throw std::invalid_argument("term outside the degree piece");
    out[*k] = field.add(out[*k], t.coeff);
  }
  return out;
}

QuotientPiece::QuotientPiece(const ModulePresentation& M, int d, simd::Isa isa)
    : basis_(M.nvars(), M.generators, d), image_(M.ring->field(), basis_.size(), isa) {
  const auto& F = M.ring->field();
  const std::size_t n = M.nvars();
  std::vector<VecTerm> shifted;
  for (std::size_t j = 0; j < M.relations.columns.size() && !image_.full(); ++j) {
    const auto& col = M.relations.columns[j];
    if (col.is_zero()) continue;
    const int e = d - M.relations.source.twists[j];
    if (e < 0) continue;
    for (const auto& m : monomials_of_degree(n, e)) {
      shifted.clear();
      for (const auto& t : col.terms()) shifted.push_back({t.mono * m, t.comp, t.coeff});
      image_.insert(basis_.coordinates(shifted, F));
      if (image_.full()) break;
    }
  }
  position_.assign(basis_.size(), -1);
  for (std::size_t c = 0; c < basis_.size(); ++c) {
    if (image_.pivot_at(c) < 0) {
      position_[c] = static_cast<int>(standard_.size());
      standard_.push_back(c);
    }
  }
}

std::vector<Coeff> QuotientPiece::classify(std::vector<Coeff> ambient_coords) const {
  image_.reduce(ambient_coords);
  std::vector<Coeff> out(standard_.size(), 0);
  for (std::size_t k = 0; k < standard_.size(); ++k) out[k] = ambient_coords[standard_[k]];
  return out;
}

}  // namespace kreg

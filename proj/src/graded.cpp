#include "kreg/graded.hpp"

#include <algorithm>

namespace kreg {

std::optional<int> GradedFreeModule::mindeg() const {
  if (twists.empty()) return std::nullopt;
  return *std::min_element(twists.begin(), twists.end());
}

std::int64_t GradedFreeModule::dim_in_degree(std::size_t nvars, int d) const {
  std::int64_t total = 0;
  for (int a : twists) total += monomial_count(nvars, d - a);
  return total;
}

GradedFreeModule GradedFreeModule::dual() const {
  GradedFreeModule out;
  out.twists.reserve(twists.size());
  for (int a : twists) out.twists.push_back(-a);
  return out;
}

FreeVector::FreeVector(Ring ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {
  if (!ring_) throw std::invalid_argument("vector needs a ring");
}

FreeVector FreeVector::from_components(Ring ring, const std::vector<Polynomial>& components) {
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < components.size(); ++i) {
    require_same_ring(ring, components[i].ring());
    for (const auto& t : components[i].terms()) terms.push_back({t.mono, static_cast<std::uint32_t>(i), t.coeff});
  }
  return from_terms(std::move(ring), components.size(), std::move(terms));
}

FreeVector FreeVector::basis(Ring ring, std::size_t rank, std::size_t i) {
  if (i >= rank) throw std::out_of_range("basis index out of range");
  FreeVector v(std::move(ring), rank);
  v.terms_.push_back({Monomial(v.ring_->nvars()), static_cast<std::uint32_t>(i), 1});
  return v;
}

FreeVector FreeVector::from_terms(Ring ring, std::size_t rank, std::vector<VecTerm> terms) {
  FreeVector v(std::move(ring), rank);
  const auto& F = v.ring_->field();
  std::sort(terms.begin(), terms.end(), [](const VecTerm& a, const VecTerm& b) { return compare_top(a, b) > 0; });
  for (auto& t : terms) {
    if (t.comp >= rank) throw std::out_of_range("vector component out of range");
    Coeff c = t.coeff % F.characteristic();
    if (!v.terms_.empty() && v.terms_.back().mono == t.mono && v.terms_.back().comp == t.comp) {
      v.terms_.back().coeff = F.add(v.terms_.back().coeff, c);
      if (v.terms_.back().coeff == 0) v.terms_.pop_back();
    } else if (c != 0) {
      v.terms_.push_back({t.mono, t.comp, c});
    }
  }
  return v;
}

Polynomial FreeVector::component(std::size_t i) const {
  std::vector<Term> terms;
  for (const auto& t : terms_)
    if (t.comp == i) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(ring_, std::move(terms));
}

std::optional<int> FreeVector::degree_in(const GradedFreeModule& ambient) const {
  if (ambient.rank() != rank_) throw std::invalid_argument("vector rank does not match ambient module");
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().mono.degree() + ambient.twists[terms_.front().comp];
  for (const auto& t : terms_)
    if (t.mono.degree() + ambient.twists[t.comp] != d) throw NotHomogeneous("vector is not homogeneous");
  return d;
}

FreeVector FreeVector::scaled(Coeff c) const {
  const auto& F = ring_->field();
  c %= F.characteristic();
  FreeVector out(ring_, rank_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = F.mul(t.coeff, c);
  return out;
}

FreeVector FreeVector::times(const Monomial& m, Coeff c) const {
  const auto& F = ring_->field();
  c %= F.characteristic();
  FreeVector out(ring_, rank_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.comp, F.mul(t.coeff, c)});
  return out;
}

FreeVector FreeVector::times(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  FreeVector out(ring_, rank_);
  for (const auto& t : f.terms()) out.add_scaled(times(t.mono), t.coeff);
  return out;
}

FreeVector& FreeVector::add_scaled(const FreeVector& other, Coeff scale) {
  require_same_ring(ring_, other.ring_);
  if (other.rank_ != rank_) throw std::invalid_argument("vector rank mismatch");
  const auto& F = ring_->field();
  std::vector<VecTerm> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (a == terms_.end())
      cmp = std::strong_ordering::less;
    else if (b == other.terms_.end())
      cmp = std::strong_ordering::greater;
    else
      cmp = compare_top(*a, *b);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      Coeff c = F.mul(b->coeff, scale);
      if (c != 0) out.push_back({b->mono, b->comp, c});
      ++b;
    } else {
      Coeff c = F.add(a->coeff, F.mul(b->coeff, scale));
      if (c != 0) out.push_back({a->mono, a->comp, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

FreeVector& FreeVector::operator+=(const FreeVector& other) { return add_scaled(other, 1); }
FreeVector& FreeVector::operator-=(const FreeVector& other) { return add_scaled(other, ring_->field().neg(1)); }

FreeVector FreeVector::remapped(const std::vector<int>& map, std::size_t new_rank) const {
  std::vector<VecTerm> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    int c = map.at(t.comp);
    if (c >= 0) terms.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
  }
  return from_terms(ring_, new_rank, std::move(terms));
}

std::string FreeVector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i) s += ", ";
    s += component(i).to_string();
  }
  return s + "]";
}

GradedMap GradedMap::zero(const Ring& ring, GradedFreeModule source, GradedFreeModule target) {
  GradedMap m{std::move(source), std::move(target), {}};
  m.columns.assign(m.source.rank(), FreeVector(ring, m.target.rank()));
  return m;
}

void GradedMap::validate() const {
  if (columns.size() != source.rank()) throw std::invalid_argument("map has wrong number of columns");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != target.rank()) throw std::invalid_argument("map column has wrong rank");
    std::optional<int> d;
    try {
      d = columns[j].degree_in(target);
    } catch (const NotHomogeneous&) {
      throw std::invalid_argument("map column " + std::to_string(j) + " is not homogeneous");
    }
    if (d && *d != source.twists[j])
      throw std::invalid_argument("map column " + std::to_string(j) + " has degree " + std::to_string(*d) +
                                  " but source twist " + std::to_string(source.twists[j]));
  }
}

bool GradedMap::has_unit_entry() const {
  for (const auto& col : columns)
    for (const auto& t : col.terms())
      if (t.mono.is_one()) return true;
  return false;
}

FreeVector GradedMap::apply(const FreeVector& v) const {
  if (v.rank() != source.rank()) throw std::invalid_argument("vector not in map source");
  const Ring& ring = v.ring();
  FreeVector out(ring, target.rank());
  for (const auto& t : v.terms()) out += columns[t.comp].times(t.mono, t.coeff);
  return out;
}

GradedMap compose(const GradedMap& outer, const GradedMap& inner) {
  if (!(inner.target == outer.source)) throw std::invalid_argument("maps are not composable");
  GradedMap out{inner.source, outer.target, {}};
  out.columns.reserve(inner.columns.size());
  for (const auto& col : inner.columns) out.columns.push_back(outer.apply(col));
  return out;
}

ModulePresentation::ModulePresentation(Ring ring_, GradedFreeModule generators_, GradedMap relations_)
    : ring(std::move(ring_)), generators(std::move(generators_)), relations(std::move(relations_)) {
  if (!(relations.target == generators)) throw std::invalid_argument("relations must map into the generators");
  for (const auto& c : relations.columns) require_same_ring(ring, c.ring());
  relations.validate();
}

ModulePresentation ModulePresentation::cyclic(const Ring& ring, const std::vector<Polynomial>& ideal) {
  std::vector<FreeVector> rel;
  for (const auto& f : ideal) rel.push_back(FreeVector::from_components(ring, {f}));
  return from_relations(ring, GradedFreeModule{{0}}, rel);
}

ModulePresentation ModulePresentation::free(const Ring& ring, GradedFreeModule generators) {
  GradedMap rel = GradedMap::zero(ring, {}, generators);
  return ModulePresentation(ring, std::move(generators), std::move(rel));
}

ModulePresentation ModulePresentation::from_relations(const Ring& ring, GradedFreeModule generators,
                                                      const std::vector<FreeVector>& relations) {
  GradedMap rel{{}, generators, {}};
  for (const auto& v : relations) {
    if (v.rank() != generators.rank()) throw std::invalid_argument("relation rank does not match generators");
    std::optional<int> d;
    try {
      d = v.degree_in(generators);
    } catch (const NotHomogeneous&) {
      throw NotHomogeneous("relation " + v.to_string() + " is not homogeneous");
    }
    if (!d) continue;
    rel.source.twists.push_back(*d);
    rel.columns.push_back(v);
  }
  return ModulePresentation(ring, std::move(generators), std::move(rel));
}

GradedFreeModule FreeComplex::module(int i) const {
  auto it = modules.find(i);
  return it == modules.end() ? GradedFreeModule{} : it->second;
}

GradedMap FreeComplex::differential(int i) const {
  auto it = differentials.find(i);
  if (it != differentials.end()) return it->second;
  return GradedMap::zero(ring, module(i), module(i - 1));
}

int FreeComplex::min_index() const { return modules.empty() ? 0 : modules.begin()->first; }
int FreeComplex::max_index() const { return modules.empty() ? -1 : modules.rbegin()->first; }

bool FreeComplex::is_complex() const {
  for (const auto& [i, d] : differentials) {
    auto next = differentials.find(i + 1);
    if (next == differentials.end()) continue;
    for (const auto& col : compose(d, next->second).columns)
      if (!col.is_zero()) return false;
  }
  return true;
}

void FreeComplex::validate() const {
  for (const auto& [i, d] : differentials) {
    if (!(d.source == module(i)) || !(d.target == module(i - 1)))
      throw std::invalid_argument("differential " + std::to_string(i) + " does not match the modules");
    d.validate();
  }
}

}  // namespace kreg

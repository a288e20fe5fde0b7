#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kreg/polynomial.hpp"

namespace kreg {

/// A term m * e_comp of a free module.
struct VecTerm {
  Monomial mono;
  std::uint32_t comp;
  Coeff coeff;

  friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// Position-last term order: degrevlex on the monomial, ties broken by the
/// smaller component index ranking higher.
inline std::strong_ordering compare_top(const VecTerm& a, const VecTerm& b) noexcept {
  if (auto c = degrevlex(a.mono, b.mono); c != 0) return c;
  return b.comp <=> a.comp;
}

/// ⊕ S(-a_i).  Component i is generated in degree twists[i].
struct GradedFreeModule {
  std::vector<int> twists;

  std::size_t rank() const noexcept { return twists.size(); }
  bool is_zero() const noexcept { return twists.empty(); }
  /// Smallest twist; nullopt for the zero module.
  std::optional<int> mindeg() const;
  /// dim_K of the degree-d piece.
  std::int64_t dim_in_degree(std::size_t nvars, int d) const;
  GradedFreeModule dual() const;

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Element of a free module of fixed rank, stored as a sorted sparse term list
/// (descending compare_top, nonzero coefficients).
class FreeVector {
 public:
  FreeVector(Ring ring, std::size_t rank);

  static FreeVector from_components(Ring ring, const std::vector<Polynomial>& components);
  static FreeVector basis(Ring ring, std::size_t rank, std::size_t i);
  /// Sorts and combines; used by code that builds vectors term by term.
  static FreeVector from_terms(Ring ring, std::size_t rank, std::vector<VecTerm> terms);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<VecTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial component(std::size_t i) const;

  /// Internal degree with respect to the given twists: nullopt for the zero
  /// vector, NotHomogeneous if the terms disagree.
  std::optional<int> degree_in(const GradedFreeModule& ambient) const;

  FreeVector scaled(Coeff c) const;
  FreeVector times(const Polynomial& f) const;
  FreeVector times(const Monomial& m, Coeff c = 1) const;

  FreeVector& operator+=(const FreeVector& other);
  FreeVector& operator-=(const FreeVector& other);
  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }

  friend bool operator==(const FreeVector& a, const FreeVector& b) noexcept {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  /// Re-index components through `map` (old index -> new index) into rank `new_rank`.
  /// Terms whose component maps to a negative index are dropped.
  FreeVector remapped(const std::vector<int>& map, std::size_t new_rank) const;

  std::string to_string() const;

 private:
  FreeVector& add_scaled(const FreeVector& other, Coeff scale);

  Ring ring_;
  std::size_t rank_;
  std::vector<VecTerm> terms_;
};

/// Degree-preserving map between graded free modules, stored by columns:
/// columns[j] is the image of the j-th basis element of the source.
struct GradedMap {
  GradedFreeModule source;
  GradedFreeModule target;
  std::vector<FreeVector> columns;

  static GradedMap zero(const Ring& ring, GradedFreeModule source, GradedFreeModule target);

  Polynomial entry(std::size_t row, std::size_t col) const { return columns.at(col).component(row); }

  /// Checks shapes and that entry (i,j) is 0 or homogeneous of degree
  /// source_j - target_i.  Throws std::invalid_argument otherwise.
  void validate() const;

  /// True when some entry is a nonzero constant.
  bool has_unit_entry() const;

  /// Image of a vector of the source.
  FreeVector apply(const FreeVector& v) const;
};

/// this ∘ other
GradedMap compose(const GradedMap& outer, const GradedMap& inner);

/// coker(relations : F_1 -> F_0) with F_0 = generators.
struct ModulePresentation {
  Ring ring;
  GradedFreeModule generators;
  GradedMap relations;

  ModulePresentation(Ring ring, GradedFreeModule generators, GradedMap relations);

  /// S/(ideal).
  static ModulePresentation cyclic(const Ring& ring, const std::vector<Polynomial>& ideal);
  /// ⊕ S(-a_i) with no relations.
  static ModulePresentation free(const Ring& ring, GradedFreeModule generators);
  /// Builds relation columns from vectors; zero vectors are dropped and column
  /// degrees are read off the vectors.
  static ModulePresentation from_relations(const Ring& ring, GradedFreeModule generators,
                                           const std::vector<FreeVector>& relations);

  std::size_t nvars() const noexcept { return ring->nvars(); }
};

/// Homological complex ... -> C_i -> C_{i-1} -> ...; indices not present are
/// zero.  differentials[i] maps C_i to C_{i-1}.  Cohomological complexes are
/// stored with negated indices.
struct FreeComplex {
  Ring ring;
  std::map<int, GradedFreeModule> modules;
  std::map<int, GradedMap> differentials;

  GradedFreeModule module(int i) const;
  /// d_i, or the zero map if absent.
  GradedMap differential(int i) const;
  int min_index() const;
  int max_index() const;

  /// d_{i} ∘ d_{i+1} == 0 for every i.
  bool is_complex() const;
  void validate() const;
};

}  // namespace kreg

#pragma once

// Degree-by-degree linear algebra on graded modules.  These routines never
// touch Gröbner bases; they are the independent side of every cross-check.

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "kreg/dense.hpp"
#include "kreg/graded.hpp"

namespace kreg {

/// Monomial basis {m e_i : deg m = d - a_i} of the degree-d piece of a graded
/// free module.
class PieceBasis {
 public:
  PieceBasis(std::size_t nvars, const GradedFreeModule& F, int d);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const VecTerm& element(std::size_t k) const { return elements_[k]; }
  std::optional<std::size_t> index_of(std::uint32_t comp, const Monomial& m) const;

  /// Dense coordinates of a sum of terms all lying in this degree.
  std::vector<Coeff> coordinates(std::span<const VecTerm> terms, const PrimeField& field) const;

 private:
  struct Key {
    std::uint32_t comp;
    Monomial mono;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k.mono.hash() * 31u + k.comp; }
  };

  int degree_;
  std::vector<VecTerm> elements_;  // coeff unused
  std::unordered_map<Key, std::size_t, KeyHash> index_;
};

/// Degree-d piece of M = coker(F_1 -> F_0): the image of (F_1)_d in echelon
/// form, with the non-pivot basis elements of (F_0)_d as a basis of M_d.
class QuotientPiece {
 public:
  QuotientPiece(const ModulePresentation& M, int d, simd::Isa isa);

  std::size_t dim() const noexcept { return standard_.size(); }
  const PieceBasis& ambient() const noexcept { return basis_; }
  /// Ambient index of the k-th basis element of M_d.
  std::size_t standard(std::size_t k) const { return standard_[k]; }

  /// Coordinates, in the basis of M_d, of the class of a vector of (F_0)_d.
  std::vector<Coeff> classify(std::vector<Coeff> ambient_coords) const;

 private:
  PieceBasis basis_;
  DenseEchelon image_;
  std::vector<std::size_t> standard_;
  std::vector<int> position_;  // ambient index -> standard position or -1
};

}  // namespace kreg

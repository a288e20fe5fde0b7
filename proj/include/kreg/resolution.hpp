#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kreg/graded.hpp"
#include "kreg/groebner.hpp"

namespace kreg {

/// Graded Betti numbers b_{ij}: rank of the degree-j part of F_i.
///
/// Regularity-type values use std::optional<int> with nullopt standing for
/// -infinity (the zero module, or an empty row).
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;

  static BettiTable from_complex(const FreeComplex& F);

  bool empty() const noexcept { return entries.empty(); }
  /// Largest homological index with a nonzero entry; -1 when empty.
  int length() const noexcept;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// max{ j - i : b_ij != 0 }
std::optional<int> regularity(const BettiTable& B);
/// t_i = max{ j : b_ij != 0 }
std::optional<int> t_index(const BettiTable& B, int i);

struct Resolution {
  FreeComplex complex;  // F_0 at index 0, F_i at index i
  BettiTable betti;

  /// Projective dimension; -1 for the zero module.
  int length() const noexcept { return betti.length(); }
};

/// Removes redundant generators (unit pivots) and redundant relations.
ModulePresentation minimalize(const ModulePresentation& M);

bool is_zero_module(const ModulePresentation& M);

/// Minimal graded free resolution; every differential has entries in the
/// maximal ideal and the length is at most the number of variables.
Resolution minimal_free_resolution(const ModulePresentation& M);

/// ker d_i / im d_{i+1}, minimally presented.  Throws std::logic_error if
/// d_i ∘ d_{i+1} != 0.
ModulePresentation homology_at(const FreeComplex& C, int i);

/// Hom(C, S): transposed differentials, negated twists, index i -> -i.
FreeComplex dualize(const FreeComplex& C);

/// Ext^p(M, S) as the homology of the dualized minimal resolution at -p.
ModulePresentation ext_module(const ModulePresentation& M, int p);
ModulePresentation ext_module(const Resolution& F, int p);

struct ModuleInvariants {
  int dim = -1;
  int depth = 0;
  int pd = -1;
  int grade_codim = 0;
  bool is_cm = false;
  bool is_perfect = false;
  bool finite_length = true;
  /// nullopt = infinite length
  std::optional<std::int64_t> length;
  /// nullopt = +infinity (zero module)
  std::optional<int> mindeg;
  /// nullopt = -infinity (zero module)
  std::optional<int> reg;
  bool is_zero = true;
};

/// pd from the minimal resolution, depth = n - pd, dim from the initial
/// module of the relations.  The zero module gets dim = -1, pd = -1,
/// depth = grade_codim = n + 1, length 0 and both sentinels.
ModuleInvariants module_invariants(const ModulePresentation& M);
ModuleInvariants module_invariants(const ModulePresentation& M, const Resolution& F);

/// Maximal minors of the relation matrix (size = number of generators).
/// Empty when there are fewer relations than generators (Fitt_0 = 0).
std::vector<Polynomial> zeroth_fitting_ideal(const ModulePresentation& M);

/// Top nonzero degree of the Hilbert function, scanned up to d_cap.
/// Throws PreconditionError if M does not have finite length.
std::optional<int> regularity_finite_length_oracle(const ModulePresentation& M, int d_cap);

/// Exact test that multiplication by u is injective on M, via (im R : u) ⊆ im R.
bool is_nonzerodivisor(const ModulePresentation& M, const Polynomial& u);

/// M/uM for a linear form u regular on M.  Throws PreconditionError when u
/// is a zerodivisor and std::invalid_argument when u is not a linear form.
ModulePresentation quotient_by_linear_regular(const ModulePresentation& M, const Polynomial& u);

/// M/(x_1..x_l)M.
ModulePresentation quotient_by_ideal(const ModulePresentation& M, const std::vector<Polynomial>& ideal);

}  // namespace kreg

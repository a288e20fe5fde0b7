#pragma once

#include <cstdint>
#include <vector>

#include "kreg/graded.hpp"
#include "kreg/simd/rowops.hpp"

namespace kreg {

/// Gröbner basis of a submodule of a graded free module with respect to the
/// position-last extension of degrevlex (ideals are the rank-1 case).
struct GroebnerBasis {
  Ring ring;
  GradedFreeModule ambient;
  std::vector<FreeVector> generators;  // monic
  bool reduced = false;

  /// Leading terms of the generators, in generator order.
  std::vector<VecTerm> leading_terms() const;
};

/// Remainder of v after full division by G.
FreeVector normal_form(const FreeVector& v, const GroebnerBasis& G);

/// Reduced Gröbner basis of the submodule generated by homogeneous `gens`.
/// Throws NotHomogeneous on inhomogeneous input.
GroebnerBasis buchberger(const Ring& ring, const GradedFreeModule& ambient, const std::vector<FreeVector>& gens);
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& ideal);

/// Checks the S-pair criterion directly: every S-vector of two generators with
/// the same leading component reduces to zero.
bool all_s_pairs_reduce_to_zero(const GroebnerBasis& G);

/// Generators of ker(m), a map Z -> source(m) whose columns minimally
/// generate the kernel.  Throws std::invalid_argument on inhomogeneous columns.
GradedMap syzygy_generators(const GradedMap& m);

/// Minimal generators of { a : m(a) ∈ U } where U is spanned by `modulo`
/// (the kernel of source -> target/U).
GradedMap syzygies_modulo(const GradedMap& m, const std::vector<FreeVector>& modulo);

/// Indices of a minimal generating subset of the submodule spanned by `gens`,
/// chosen greedily in increasing degree (input order breaks ties).
std::vector<std::size_t> minimal_generator_indices(const Ring& ring, const GradedFreeModule& ambient,
                                                   const std::vector<FreeVector>& gens);

/// Krull dimension of S/(monomial ideal); -1 if the ideal contains 1.
int monomial_quotient_dimension(std::size_t nvars, const std::vector<Monomial>& gens);

/// Krull dimension of S/I via the initial ideal; dim S/(0) = n and
/// dim S/(1) = -1.
int dimension_of_quotient(const Ring& ring, const std::vector<Polynomial>& ideal);

/// Krull dimension of F/U for a Gröbner basis of U ⊆ F, read off the initial
/// module component by component; -1 when F/U = 0.
int quotient_dimension(const GroebnerBasis& G);

/// Degreewise dimensions over the field, indexed from d_min.
struct HilbertFunction {
  int d_min = 0;
  std::vector<std::int64_t> values;

  int d_max() const noexcept { return d_min + static_cast<int>(values.size()) - 1; }
  std::int64_t at(int d) const noexcept;
  std::int64_t total() const noexcept;
  /// Largest degree with a nonzero value in the window, if any.
  std::optional<int> top_degree() const noexcept;
  std::optional<int> bottom_degree() const noexcept;

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// dim_K M_d for d in [d_min, d_max], from exact ranks of the degree-d pieces
/// of the presentation matrix.
HilbertFunction hilbert_function(const ModulePresentation& M, int d_min, int d_max);
HilbertFunction hilbert_function(const ModulePresentation& M, int d_min, int d_max, simd::Isa isa);

/// Number of standard monomials of in(U) in each degree (equals the Hilbert
/// function of F/U).
HilbertFunction standard_monomial_count(const GroebnerBasis& G, int d_min, int d_max);

}  // namespace kreg

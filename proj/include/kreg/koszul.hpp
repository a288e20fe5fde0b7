#pragma once

#include <cstdint>
#include <vector>

#include "kreg/resolution.hpp"

namespace kreg {

/// Homogeneous nonzero generators x_1..x_l, stably sorted so that
/// |x_1| >= |x_2| >= ... >= |x_l|.
class GeneratorList {
 public:
  GeneratorList(Ring ring, std::vector<Polynomial> elements);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// |x_1| + ... + |x_m|, the m largest degrees; requires m <= size().
  int top_degree_sum(std::size_t m) const;

 private:
  Ring ring_;
  std::vector<Polynomial> elements_;
  std::vector<int> degrees_;
};

/// Size-p subsets of {0..l-1} in lexicographic order.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t l, std::size_t p);

/// K(x): K_p = ⊕_{|T|=p} S(-Σ_{j∈T}|x_j|) with
/// d(e_T) = Σ_{j∈T} (-1)^{pos(j,T)} x_j e_{T\{j}}.
FreeComplex build_koszul(const GeneratorList& x);

/// Tot(K ⊗ F) with d(a⊗b) = d(a)⊗b + (-1)^p a⊗d(b).  Blocks of D_m are
/// ordered by increasing p; inside a block, K-basis major, F-basis minor.
FreeComplex total_tensor(const FreeComplex& K, const FreeComplex& F);

struct KoszulHomology {
  FreeComplex koszul;
  Resolution resolution;  // of M
  FreeComplex total;      // D = Tot(K(x) ⊗ F)
  std::vector<ModulePresentation> homology;  // H_k for k = 0..l
};

/// H_k(x; M) = H_k(Tot(K(x) ⊗ F)) for 0 <= k <= l, minimally presented.
KoszulHomology koszul_homology(const GeneratorList& x, const ModulePresentation& M);

/// Degreewise Hilbert functions of H_k(x; M) on [d_min, d_max] for k = 0..l,
/// computed from the complexes (K(x) ⊗ M)_d with M_d read off the
/// presentation by linear algebra.  No resolutions or Gröbner bases.
std::vector<HilbertFunction> koszul_homology_hilbert_oracle(const GeneratorList& x, const ModulePresentation& M,
                                                            int d_min, int d_max);
std::vector<HilbertFunction> koszul_homology_hilbert_oracle(const GeneratorList& x, const ModulePresentation& M,
                                                            int d_min, int d_max, simd::Isa isa);

}  // namespace kreg

#pragma once

// Buchberger engine shared by the public Gröbner, syzygy and minimal
// generator entry points.  Works on raw sorted term vectors.

#include <climits>
#include <cstdint>
#include <vector>

#include "kreg/graded.hpp"

namespace kreg::detail {

/// Block order on a free module: the block of the component decides first,
/// then degrevlex on the monomial, then the smaller component index.
struct ModuleOrder {
  std::vector<std::uint8_t> block;

  std::strong_ordering operator()(const VecTerm& a, const VecTerm& b) const noexcept {
    if (block[a.comp] != block[b.comp]) return block[a.comp] <=> block[b.comp];
    if (auto c = degrevlex(a.mono, b.mono); c != 0) return c;
    return b.comp <=> a.comp;
  }

  static ModuleOrder top(std::size_t rank) { return ModuleOrder{std::vector<std::uint8_t>(rank, 0)}; }
};

using TermVec = std::vector<VecTerm>;

struct GbElement {
  TermVec v;  // sorted descending by the engine order; monic for basis elements
  int degree;
};

struct GbConfig {
  std::vector<int> twists;
  ModuleOrder order;
  /// Components [0, image_rank) are reduced.  When image_rank is smaller than
  /// the total rank, the remaining components are carried along and elements
  /// whose reduced image part vanishes are collected as kernel elements.
  std::size_t image_rank = 0;
  bool product_criterion = false;
  bool interreduce = false;
  /// Pairs above this degree are dropped; the basis is then only valid up to it.
  int max_degree = INT_MAX;
};

struct GbResult {
  std::vector<GbElement> basis;
  std::vector<bool> input_minimal;
  std::vector<GbElement> kernel;
};

void sort_terms(TermVec& v, const ModuleOrder& order);

GbResult run_buchberger(const PrimeField& field, const GbConfig& config, std::vector<GbElement> inputs);

/// Full reduction of every term of v by the basis.
TermVec reduce_fully(const PrimeField& field, const ModuleOrder& order, TermVec v,
                     const std::vector<GbElement>& basis);

/// m1 * g1 - m2 * g2 where the leading terms cancel (both monic).
TermVec s_vector(const PrimeField& field, const ModuleOrder& order, const GbElement& a, const GbElement& b);

}  // namespace kreg::detail

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kreg/field.hpp"
#include "kreg/simd/rowops.hpp"

namespace kreg {

/// Incremental row echelon form over F_p.
///
/// Rows are inserted one at a time; each is reduced against the stored pivot
/// rows in increasing pivot-column order and kept if a nonzero remainder is
/// left.  Pivot rows are normalized to a leading 1 and have zeros in every
/// column to the left of their pivot.  Reducing any vector leaves it with
/// zeros at all pivot columns, so the surviving coordinates give its class
/// modulo the row space.
class DenseEchelon {
 public:
  DenseEchelon(const PrimeField& field, std::size_t cols);
  DenseEchelon(const PrimeField& field, std::size_t cols, simd::Isa isa);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == cols_; }

  /// Returns true if the row enlarged the row space.
  bool insert(std::vector<Coeff> row);

  void reduce(std::span<Coeff> row) const;

  /// Pivot row index for a column, or -1.
  int pivot_at(std::size_t col) const noexcept { return pivot_of_col_[col]; }

  simd::Isa isa() const noexcept { return isa_; }

 private:
  PrimeField field_;
  std::size_t cols_;
  simd::Isa isa_;
  simd::AxpyFn axpy_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<int> pivot_of_col_;
};

/// Incremental echelon form for sparse rows (sorted (column, value) pairs).
/// Rows are reduced in a dense scratch buffer, so each insert costs one pass
/// over the columns plus the pivot rows actually used.
class SparseEchelon {
 public:
  using Entry = std::pair<std::uint32_t, Coeff>;
  using Row = std::vector<Entry>;

  SparseEchelon(const PrimeField& field, std::size_t cols);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == cols_; }

  /// Entries may be unsorted and repeat a column; repeats are summed.
  bool insert(const Row& row);

 private:
  PrimeField field_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<int> pivot_of_col_;
  std::vector<std::uint64_t> acc_;
};

/// Rank of a dense matrix given as rows.
std::size_t dense_rank(const PrimeField& field, std::size_t cols, std::vector<std::vector<Coeff>> rows);

}  // namespace kreg

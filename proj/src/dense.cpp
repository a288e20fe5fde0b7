#include "kreg/dense.hpp"

#include <algorithm>
#include <stdexcept>

namespace kreg {

DenseEchelon::DenseEchelon(const PrimeField& field, std::size_t cols)
    : DenseEchelon(field, cols, simd::best_isa(field.characteristic())) {}

DenseEchelon::DenseEchelon(const PrimeField& field, std::size_t cols, simd::Isa isa)
    : field_(field), cols_(cols), isa_(isa), axpy_(simd::axpy_kernel(isa)), pivot_of_col_(cols, -1) {
  if (!simd::isa_usable(isa, field.characteristic()))
    throw std::invalid_argument("row kernel not usable for this modulus or CPU");
}

void DenseEchelon::reduce(std::span<Coeff> row) const {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  const std::uint32_t p = field_.characteristic();
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c] == 0) continue;
    int r = pivot_of_col_[c];
    if (r < 0) continue;
    const Coeff factor = field_.neg(row[c]);
    row[c] = 0;
    const auto& pivot = rows_[static_cast<std::size_t>(r)];
    axpy_(row.subspan(c + 1), std::span<const Coeff>(pivot).subspan(c + 1), factor, p);
  }
}

bool DenseEchelon::insert(std::vector<Coeff> row) {
  if (full()) return false;
  reduce(row);
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return false;
  const Coeff inv = field_.inv(row[lead]);
  for (std::size_t c = lead; c < cols_; ++c)
    if (row[c] != 0) row[c] = field_.mul(row[c], inv);
  pivot_of_col_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

SparseEchelon::SparseEchelon(const PrimeField& field, std::size_t cols)
    : field_(field), cols_(cols), pivot_of_col_(cols, -1), acc_(cols, 0) {}

bool SparseEchelon::insert(const Row& row) {
  if (full() || row.empty()) return false;
  const std::uint64_t p = field_.characteristic();
  std::size_t lo = cols_;
  std::size_t hi = 0;
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw std::invalid_argument("column index out of range");
    acc_[c] = (acc_[c] + v) % p;
    lo = std::min<std::size_t>(lo, c);
    hi = std::max<std::size_t>(hi, c);
  }
  // Entries stay below p after every update, so acc_ never overflows.
  for (std::size_t c = lo; c <= hi; ++c) {
    if (acc_[c] == 0) continue;
    const int r = pivot_of_col_[c];
    if (r < 0) continue;
    const std::uint64_t factor = p - acc_[c];
    for (const auto& [pc, pv] : rows_[static_cast<std::size_t>(r)]) {
      acc_[pc] = (acc_[pc] + factor * pv) % p;
      hi = std::max<std::size_t>(hi, pc);
    }
  }
  Row out;
  for (std::size_t c = lo; c <= hi; ++c) {
    if (acc_[c] != 0) out.push_back({static_cast<std::uint32_t>(c), static_cast<Coeff>(acc_[c])});
    acc_[c] = 0;
  }
  if (out.empty()) return false;
  const Coeff inv = field_.inv(out.front().second);
  for (auto& e : out) e.second = field_.mul(e.second, inv);
  pivot_of_col_[out.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(out));
  return true;
}

std::size_t dense_rank(const PrimeField& field, std::size_t cols, std::vector<std::vector<Coeff>> rows) {
  DenseEchelon ech(field, cols);
  for (auto& r : rows) {
    if (ech.full()) break;
    ech.insert(std::move(r));
  }
  return ech.rank();
}

}  // namespace kreg

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kreg/errors.hpp"
#include "kreg/field.hpp"

namespace kreg {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of a monomial in at most kMaxVars variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const noexcept { return exp_[i]; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, int e);

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept;
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept;
  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exp_ == b.exp_ && a.nvars_ == b.nvars_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint8_t nvars_ = 0;
  int degree_ = 0;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
  Monomial r = a;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

inline Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
  Monomial r = a;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] - b.exp_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
    r.degree_ += r.exp_[i];
  }
  return r;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Degree reverse lexicographic comparison with x_1 > x_2 > ... > x_n.
/// No length check; see TermOrder::compare for the checked entry point.
inline std::strong_ordering degrevlex(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

struct TermOrder {
  enum class Kind { degrevlex };
  Kind kind = Kind::degrevlex;

  /// Throws std::invalid_argument when the monomials have different lengths.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
};

/// All monomials of total degree d in n variables, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);

/// Number of monomials of degree d in n variables (0 for d < 0).
std::int64_t monomial_count(std::size_t nvars, int d);

/// The coordinate ring F_p[x_1..x_n] with named variables.
class RingSpec {
 public:
  RingSpec(std::uint32_t characteristic, std::vector<std::string> variables);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }

  /// Index of a variable name, or -1.
  int variable_index(std::string_view name) const noexcept;

  friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
    return a.field_ == b.field_ && a.vars_ == b.vars_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
};

using Ring = std::shared_ptr<const RingSpec>;

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

Ring make_ring(std::uint32_t characteristic, std::vector<std::string> variables);

/// Same ring if the pointers match or the specs compare equal.
bool same_ring(const Ring& a, const Ring& b) noexcept;
void require_same_ring(const Ring& a, const Ring& b);

std::string monomial_to_string(const RingSpec& ring, const Monomial& m);

}  // namespace kreg

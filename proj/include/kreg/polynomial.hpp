#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kreg/ring.hpp"

namespace kreg {

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over a RingSpec.  Terms are kept in descending degrevlex
/// order with nonzero coefficients, so equal polynomials have equal term lists.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial monomial(Ring ring, const Monomial& m, Coeff c = 1);
  /// Sorts and combines arbitrary terms; zero coefficients vanish.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Common total degree of the terms; nullopt when they disagree.
  /// Throws std::domain_error on the zero polynomial.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  /// Coefficient of the constant term.
  Coeff constant_coeff() const noexcept;

  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

  /// Canonical form: terms in descending order, coefficients as least
  /// nonnegative residues, e.g. "x^2 + 3*y*z".
  std::string to_string() const;

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms);
  Polynomial& add_scaled(const Polynomial& other, Coeff scale);

  Ring ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

/// Dispatching entry point; equivalent to the operators.
Polynomial poly_arithmetic(ArithOp op, const Polynomial& a, const Polynomial& b);

}  // namespace kreg

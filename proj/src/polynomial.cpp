#include "kreg/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace kreg {

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  Polynomial p(std::move(ring));
  Coeff v = p.ring_->field().from_int(c);
  if (v != 0) p.terms_.push_back({Monomial(p.ring_->nvars()), v});
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::variable(p.ring_->nvars(), i), 1});
  return p;
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  if (m.nvars() != p.ring_->nvars()) throw std::invalid_argument("monomial length does not match ring");
  c %= p.ring_->characteristic();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const auto& F = p.ring_->field();
  for (const auto& t : terms)
    if (t.mono.nvars() != p.ring_->nvars()) throw std::invalid_argument("monomial length does not match ring");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return degrevlex(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    Coeff c = t.coeff % F.characteristic();
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = F.add(p.terms_.back().coeff, c);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.mono, c});
    }
  }
  return p;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial is undefined");
  const int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

Coeff Polynomial::constant_coeff() const noexcept {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::scaled(Coeff c) const {
  const auto& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = F.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  const auto& F = ring_->field();
  c %= F.characteristic();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, F.mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, Coeff scale) {
  require_same_ring(ring_, other.ring_);
  const auto& F = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && degrevlex(a->mono, b->mono) > 0)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || degrevlex(a->mono, b->mono) < 0) {
      out.push_back({b->mono, F.mul(b->coeff, scale)});
      ++b;
    } else {
      Coeff c = F.add(a->coeff, F.mul(b->coeff, scale));
      if (c != 0) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return add_scaled(other, 1); }

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  return add_scaled(other, ring_->field().neg(1));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  const auto& F = a.ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono, 0);
      it->second = F.add(it->second, F.mul(s.coeff, t.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, c});
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return degrevlex(x.mono, y.mono) > 0; });
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator-(const Polynomial& a) { return a.scaled(a.ring_->field().neg(1)); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) s += std::to_string(t.coeff) + "*";
      s += monomial_to_string(*ring_, t.mono);
    }
  }
  return s;
}

Polynomial poly_arithmetic(ArithOp op, const Polynomial& a, const Polynomial& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

}  // namespace kreg

#include "kreg/ring.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace kreg {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables for Monomial");
}

Monomial::Monomial(std::size_t nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw std::invalid_argument("exponent vector length mismatch");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars);
  m.set(i, 1);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > 0xffff) throw std::out_of_range("exponent out of range");
  degree_ += e - exp_[i];
  exp_[i] = static_cast<std::uint16_t>(e);
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials of different lengths");
  return degrevlex(a, b);
}

namespace {

void fill_monomials(std::size_t nvars, std::size_t var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    fill_monomials(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || nvars == 0) return out;
  Monomial cur(nvars);
  fill_monomials(nvars, 0, d, cur, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) > 0; });
  return out;
}

std::int64_t monomial_count(std::size_t nvars, int d) {
  if (d < 0) return 0;
  // C(d + n - 1, n - 1)
  std::int64_t r = 1;
  for (std::size_t i = 1; i < nvars; ++i) r = r * (d + static_cast<std::int64_t>(i)) / static_cast<std::int64_t>(i);
  return r;
}

RingSpec::RingSpec(std::uint32_t characteristic, std::vector<std::string> variables)
    : field_(characteristic), vars_(std::move(variables)) {
  if (vars_.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (vars_.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
  static const std::regex ident("[a-zA-Z][a-zA-Z0-9_]*");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!std::regex_match(v, ident)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
}

int RingSpec::variable_index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

Ring make_ring(std::uint32_t characteristic, std::vector<std::string> variables) {
  return std::make_shared<const RingSpec>(characteristic, std::move(variables));
}

bool same_ring(const Ring& a, const Ring& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw RingMismatch("operands live in different rings");
}

std::string monomial_to_string(const RingSpec& ring, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace kreg

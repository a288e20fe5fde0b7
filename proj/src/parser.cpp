#include "kreg/parser.hpp"

#include <cctype>

namespace kreg {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    if (accept('-')) {
      acc -= term();
    } else {
      acc += term();
    }
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, integer());
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a natural exponent");
      std::size_t start = pos_;
      unsigned long long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (e > 0xffff) throw ParseError(start, "exponent too large");
        ++pos_;
      }
      Polynomial r = Polynomial::constant(ring_, 1);
      for (unsigned long long i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  // Reduced modulo p while reading so arbitrarily long literals are fine.
  std::int64_t integer() {
    const std::uint64_t p = ring_->characteristic();
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = (v * 10 + static_cast<unsigned>(text_[pos_] - '0')) % p;
      ++pos_;
    }
    return static_cast<std::int64_t>(v);
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = ring_->variable_index(name);
      if (idx < 0) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  if (!ring) throw std::invalid_argument("parse_polynomial needs a ring");
  return Parser(text, ring).parse();
}

}  // namespace kreg

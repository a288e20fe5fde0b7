#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kreg/polynomial.hpp"

namespace kreg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses
///   expr    := term { ("+"|"-") term } | "-" term { ("+"|"-") term }
///   term    := factor { "*" factor }
///   factor  := integer | primary [ "^" natural ]
///   primary := identifier | "(" expr ")"
/// Whitespace is insignificant and multiplication must be explicit.
/// Integer literals are reduced modulo the characteristic.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

}  // namespace kreg

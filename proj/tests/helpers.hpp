#pragma once

#include <string>
#include <vector>

#include "kreg/parser.hpp"
#include "kreg/resolution.hpp"

namespace kreg::testing {

inline Ring ring_xy() { return make_ring(kDefaultCharacteristic, {"x", "y"}); }
inline Ring ring_xyz() { return make_ring(kDefaultCharacteristic, {"x", "y", "z"}); }
inline Ring ring_xyzw() { return make_ring(kDefaultCharacteristic, {"x", "y", "z", "w"}); }

inline Polynomial P(const Ring& r, const std::string& s) { return parse_polynomial(s, r); }

inline std::vector<Polynomial> polys(const Ring& r, const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(parse_polynomial(s, r));
  return out;
}

inline ModulePresentation quotient(const Ring& r, const std::vector<std::string>& ss) {
  return ModulePresentation::cyclic(r, polys(r, ss));
}

inline std::vector<int> twists_at(const Resolution& R, int i) { return R.complex.module(i).twists; }

}  // namespace kreg::testing

#include <random>
#include <vector>

#include "doctest.h"
#include "kreg/dense.hpp"
#include "kreg/field.hpp"
#include "kreg/simd/rowops.hpp"
#include "oracles.hpp"

using namespace kreg;
using namespace kreg::testing;

namespace {

std::vector<simd::Isa> usable_isas(std::uint32_t p) {
  std::vector<simd::Isa> out{simd::Isa::scalar};
  if (simd::isa_usable(simd::Isa::avx2, p)) out.push_back(simd::Isa::avx2);
  return out;
}

std::vector<std::vector<Coeff>> random_matrix(Sampler& s, std::size_t rows, std::size_t cols, std::uint32_t p,
                                              int zero_percent) {
  std::vector<std::vector<Coeff>> m(rows, std::vector<Coeff>(cols));
  for (auto& r : m)
    for (auto& v : r) v = s.between(0, 99) < zero_percent ? 0 : static_cast<Coeff>(s.between(0, p - 1));
  return m;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(32003));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(32001));
  CHECK_THROWS_AS(PrimeField(32001), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
  for (std::uint32_t p : {2u, 7u, 32003u, 2147483647u}) {
    PrimeField F(p);
    Sampler s(p);
    for (int it = 0; it < 500; ++it) {
      Coeff a = static_cast<Coeff>(s.between(0, p - 1));
      Coeff b = static_cast<Coeff>(s.between(0, p - 1));
      Coeff c = static_cast<Coeff>(s.between(0, p - 1));
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK_THROWS(F.inv(0));
    CHECK(F.from_int(-1) == p - 1);
    CHECK(F.from_int(static_cast<std::int64_t>(p) * 3 + 1) == 1 % p);
  }
}

TEST_CASE("to_signed picks the small representative") {
  PrimeField F(7);
  CHECK(F.to_signed(6) == -1);
  CHECK(F.to_signed(3) == 3);
  CHECK(F.to_signed(4) == -3);
}

TEST_CASE("axpy variants agree with the scalar kernel") {
  Sampler s(5);
  for (std::uint32_t p : {2u, 7u, 32003u, simd::kMaxLaneModulus}) {
    for (auto isa : usable_isas(p)) {
      auto fn = simd::axpy_kernel(isa);
      for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 100u}) {
        std::vector<Coeff> dst(len), src(len);
        for (auto& v : dst) v = static_cast<Coeff>(s.between(0, p - 1));
        for (auto& v : src) v = static_cast<Coeff>(s.between(0, p - 1));
        Coeff f = static_cast<Coeff>(s.between(0, p - 1));
        auto expect = dst;
        simd::axpy_mod_scalar(expect, src, f, p);
        fn(dst, src, f, p);
        CHECK(dst == expect);
        for (auto v : dst) CHECK(v < p);
      }
    }
  }
}

TEST_CASE("scalar axpy matches field arithmetic") {
  PrimeField F(32003);
  Sampler s(9);
  std::vector<Coeff> dst(40), src(40);
  for (auto& v : dst) v = static_cast<Coeff>(s.between(0, 32002));
  for (auto& v : src) v = static_cast<Coeff>(s.between(0, 32002));
  auto out = dst;
  simd::axpy_mod_scalar(out, src, 12345, 32003);
  for (std::size_t i = 0; i < dst.size(); ++i) CHECK(out[i] == F.add(dst[i], F.mul(12345, src[i])));
}

TEST_CASE("isa selection respects the lane modulus") {
  CHECK(simd::isa_usable(simd::Isa::scalar, 2147483647));
  CHECK_FALSE(simd::isa_usable(simd::Isa::avx2, 2147483647));
  CHECK(simd::best_isa(2147483647) == simd::Isa::scalar);
  if (simd::avx2_compiled() && simd::cpu_has_avx2()) CHECK(simd::best_isa(32003) == simd::Isa::avx2);
  CHECK(simd::isa_name(simd::Isa::scalar) == "scalar");
}

TEST_CASE("echelon rank matches plain elimination") {
  Sampler s(17);
  for (std::uint32_t p : {2u, 7u, 32003u}) {
    PrimeField F(p);
    for (int it = 0; it < 40; ++it) {
      std::size_t rows = static_cast<std::size_t>(s.between(1, 30));
      std::size_t cols = static_cast<std::size_t>(s.between(1, 30));
      auto m = random_matrix(s, rows, cols, p, static_cast<int>(s.between(0, 90)));
      // Force some dependent rows.
      if (rows > 2) m[rows - 1] = m[0];
      std::vector<std::vector<std::int64_t>> wide;
      for (auto& r : m) wide.emplace_back(r.begin(), r.end());
      const std::size_t expect = naive_rank(wide, p);
      for (auto isa : usable_isas(p)) {
        DenseEchelon E(F, cols, isa);
        for (auto& r : m) E.insert(r);
        CHECK(E.rank() == expect);
      }
      CHECK(dense_rank(F, cols, m) == expect);
      SparseEchelon S(F, cols);
      for (auto& r : m) {
        SparseEchelon::Row row;
        for (std::size_t c = 0; c < cols; ++c)
          if (r[c] != 0) row.push_back({static_cast<std::uint32_t>(c), r[c]});
        S.insert(row);
      }
      CHECK(S.rank() == expect);
    }
  }
}

TEST_CASE("sparse rows may repeat columns") {
  PrimeField F(7);
  SparseEchelon S(F, 3);
  CHECK_FALSE(S.insert({{1, 3}, {1, 4}}));  // 3 + 4 = 0 mod 7
  CHECK(S.insert({{2, 1}, {0, 2}, {2, 5}}));
  CHECK(S.rank() == 1);
}

TEST_CASE("reduce leaves zeros at pivot columns") {
  PrimeField F(32003);
  Sampler s(23);
  auto m = random_matrix(s, 6, 12, 32003, 30);
  for (auto isa : usable_isas(32003)) {
    DenseEchelon E(F, 12, isa);
    for (auto& r : m) E.insert(r);
    std::vector<Coeff> v(12);
    for (auto& x : v) x = static_cast<Coeff>(s.between(0, 32002));
    E.reduce(v);
    for (std::size_t c = 0; c < 12; ++c)
      if (E.pivot_at(c) >= 0) CHECK(v[c] == 0);
    // A reduced vector from the row space vanishes.
    auto w = m[2];
    E.reduce(w);
    for (auto x : w) CHECK(x == 0);
  }
}

TEST_CASE("scalar and vector echelon reductions are bit-identical") {
  if (!simd::isa_usable(simd::Isa::avx2, 32003)) return;
  PrimeField F(32003);
  Sampler s(29);
  auto m = random_matrix(s, 20, 50, 32003, 40);
  DenseEchelon A(F, 50, simd::Isa::scalar), B(F, 50, simd::Isa::avx2);
  for (auto& r : m) CHECK(A.insert(r) == B.insert(r));
  for (int it = 0; it < 10; ++it) {
    std::vector<Coeff> v(50);
    for (auto& x : v) x = static_cast<Coeff>(s.between(0, 32002));
    auto w = v;
    A.reduce(v);
    B.reduce(w);
    CHECK(v == w);
  }
}

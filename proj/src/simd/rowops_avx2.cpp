#include <immintrin.h>

#include "kreg/simd/rowops.hpp"

namespace kreg::simd {

// sum = dst + factor*src < p^2 fits a signed 32-bit lane.  The quotient is
// estimated in single precision; its error is below one unit for
// p <= kMaxLaneModulus, so two conditional corrections finish the reduction.
void axpy_mod_avx2(std::span<Coeff> dst, std::span<const Coeff> src, Coeff factor, std::uint32_t p) {
  const std::size_t n = dst.size();
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vpm1 = _mm256_set1_epi32(static_cast<int>(p - 1));
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(factor));
  const __m256i zero = _mm256_setzero_si256();
  const __m256 vinv = _mm256_set1_ps(1.0f / static_cast<float>(p));

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    __m256i sum = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vf));
    __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(sum), vinv));
    __m256i r = _mm256_sub_epi32(sum, _mm256_mullo_epi32(q, vp));
    r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
    r = _mm256_sub_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(r, vpm1), vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), r);
  }
  if (i < n) axpy_mod_scalar(dst.subspan(i), src.subspan(i), factor, p);
}

}  // namespace kreg::simd

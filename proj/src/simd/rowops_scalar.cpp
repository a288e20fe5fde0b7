#include "kreg/simd/rowops.hpp"

namespace kreg::simd {

void axpy_mod_scalar(std::span<Coeff> dst, std::span<const Coeff> src, Coeff factor, std::uint32_t p) {
  const std::uint64_t f = factor;
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<Coeff>((dst[i] + f * src[i]) % p);
}

}  // namespace kreg::simd

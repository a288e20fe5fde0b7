#include "kreg/simd/rowops.hpp"

namespace kreg::simd {

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool avx2_compiled() noexcept {
#if defined(KREG_HAVE_AVX2)
  return true;
#else
  return false;
#endif
}

bool cpu_has_avx2() noexcept {
#if defined(KREG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

bool isa_usable(Isa isa, std::uint32_t p) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2() && p <= kMaxLaneModulus;
  }
  return false;
}

Isa best_isa(std::uint32_t p) noexcept { return isa_usable(Isa::avx2, p) ? Isa::avx2 : Isa::scalar; }

AxpyFn axpy_kernel(Isa isa) {
#if defined(KREG_HAVE_AVX2)
  if (isa == Isa::avx2) return &axpy_mod_avx2;
#else
  (void)isa;
#endif
  return &axpy_mod_scalar;
}

}  // namespace kreg::simd

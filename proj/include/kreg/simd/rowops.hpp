#pragma once

// Row kernels for dense elimination over F_p.
//
// Every kernel has a scalar reference implementation; vector variants are
// compiled into separate translation units with their own ISA flags and
// picked at runtime.  All variants must produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "kreg/field.hpp"

namespace kreg::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// dst[i] = (dst[i] + factor * src[i]) mod p.  Inputs must already be reduced
/// and src.size() must be at least dst.size().
using AxpyFn = void (*)(std::span<Coeff> dst, std::span<const Coeff> src, Coeff factor, std::uint32_t p);

void axpy_mod_scalar(std::span<Coeff> dst, std::span<const Coeff> src, Coeff factor, std::uint32_t p);

/// 8 lanes of 32-bit residues; requires p * (p - 1) < 2^31.
void axpy_mod_avx2(std::span<Coeff> dst, std::span<const Coeff> src, Coeff factor, std::uint32_t p);

/// Largest characteristic the 32-bit lane kernels accept.
inline constexpr std::uint32_t kMaxLaneModulus = 46340;

bool cpu_has_avx2() noexcept;
bool avx2_compiled() noexcept;

/// True when `isa` can run on this machine and handles modulus `p`.
bool isa_usable(Isa isa, std::uint32_t p) noexcept;

/// Best variant for `p` on this machine.
Isa best_isa(std::uint32_t p) noexcept;

AxpyFn axpy_kernel(Isa isa);

}  // namespace kreg::simd

#pragma once

// Row kernels for Gaussian elimination over prime fields.
//
// Every kernel exists as a scalar reference and, on x86-64, an AVX2 variant.
// The dispatcher picks the AVX2 path at runtime when the CPU supports it and
// the modulus is small enough for the 32-bit lane arithmetic (p < 2^15).
// Both paths produce identical results; tests/test_simd_kernels.cpp checks it.

#include <cstdint>
#include <span>
#include <string_view>

namespace profilium::simd {

enum class Isa { Scalar, Avx2 };

/// Largest modulus accepted by the vector paths.
inline constexpr std::uint32_t kVectorModulusLimit = 1u << 15;

namespace scalar {
// dst[i] = (dst[i] + factor * src[i]) mod p, residues in [0, p)
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) noexcept;
// row[i] = (factor * row[i]) mod p
void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor,
               std::uint32_t p) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) noexcept;
void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor,
               std::uint32_t p) noexcept;
}  // namespace avx2
#endif

bool cpu_has_avx2() noexcept;

/// The ISA the dispatcher would use for modulus p.
Isa selected_isa(std::uint32_t p) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// Force the scalar path (process-wide); used by equivalence tests and benchmarks.
void force_scalar(bool on) noexcept;

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) noexcept;
void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor,
               std::uint32_t p) noexcept;

}  // namespace profilium::simd

#include "profilium/simd_kernels.hpp"

#include <atomic>
#include <cassert>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define PROFILIUM_X86 1
#else
#define PROFILIUM_X86 0
#endif

namespace profilium::simd {

namespace {
std::atomic<bool> g_force_scalar{false};
}

namespace scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) noexcept {
    assert(dst.size() == src.size());
    const std::uint64_t f = factor;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = static_cast<std::uint32_t>((dst[i] + f * src[i]) % p);
    }
}

void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor,
               std::uint32_t p) noexcept {
    const std::uint64_t f = factor;
    for (auto& x : row) x = static_cast<std::uint32_t>((f * x) % p);
}

}  // namespace scalar

#if PROFILIUM_X86
namespace avx2 {
namespace {

// Reduce eight nonnegative int32 lanes (each < 2^31) modulo p.
// The quotient is estimated in double precision and corrected by one step.
__attribute__((target("avx2"))) inline __m256i reduce_lanes(__m256i x, __m256d pd,
                                                            __m256d inv,
                                                            __m256i pv) noexcept {
    const __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(x));
    const __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(x, 1));
    const __m256d qlo = _mm256_floor_pd(_mm256_mul_pd(lo, inv));
    const __m256d qhi = _mm256_floor_pd(_mm256_mul_pd(hi, inv));
    const __m256d rlo = _mm256_sub_pd(lo, _mm256_mul_pd(qlo, pd));
    const __m256d rhi = _mm256_sub_pd(hi, _mm256_mul_pd(qhi, pd));
    __m256i r = _mm256_set_m128i(_mm256_cvtpd_epi32(rhi), _mm256_cvtpd_epi32(rlo));
    // r in [-p, 2p): fold into [0, p)
    const __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, pv));
    const __m256i pm1 = _mm256_sub_epi32(pv, _mm256_set1_epi32(1));
    const __m256i big = _mm256_cmpgt_epi32(r, pm1);
    return _mm256_sub_epi32(r, _mm256_and_si256(big, pv));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod(std::span<std::uint32_t> dst,
                                               std::span<const std::uint32_t> src,
                                               std::uint32_t factor,
                                               std::uint32_t p) noexcept {
    assert(dst.size() == src.size());
    assert(p < kVectorModulusLimit && factor < p);
    const __m256i fv = _mm256_set1_epi32(static_cast<int>(factor));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
    const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    const std::size_t n = dst.size();
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
        const __m256i x =
            _mm256_add_epi32(_mm256_loadu_si256(d), _mm256_mullo_epi32(fv, _mm256_loadu_si256(s)));
        _mm256_storeu_si256(d, reduce_lanes(x, pd, inv, pv));
    }
    scalar::axpy_mod(dst.subspan(i), src.subspan(i), factor, p);
}

__attribute__((target("avx2"))) void scale_mod(std::span<std::uint32_t> row,
                                                std::uint32_t factor,
                                                std::uint32_t p) noexcept {
    assert(p < kVectorModulusLimit && factor < p);
    const __m256i fv = _mm256_set1_epi32(static_cast<int>(factor));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
    const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    const std::size_t n = row.size();
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(row.data() + i);
        const __m256i x = _mm256_mullo_epi32(fv, _mm256_loadu_si256(d));
        _mm256_storeu_si256(d, reduce_lanes(x, pd, inv, pv));
    }
    scalar::scale_mod(row.subspan(i), factor, p);
}

}  // namespace avx2
#endif

bool cpu_has_avx2() noexcept {
#if PROFILIUM_X86
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

Isa selected_isa(std::uint32_t p) noexcept {
    if (!g_force_scalar.load(std::memory_order_relaxed) && p < kVectorModulusLimit &&
        cpu_has_avx2()) {
        return Isa::Avx2;
    }
    return Isa::Scalar;
}

std::string_view isa_name(Isa isa) noexcept {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

void force_scalar(bool on) noexcept { g_force_scalar.store(on, std::memory_order_relaxed); }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) noexcept {
#if PROFILIUM_X86
    if (selected_isa(p) == Isa::Avx2) {
        avx2::axpy_mod(dst, src, factor, p);
        return;
    }
#endif
    scalar::axpy_mod(dst, src, factor, p);
}

void scale_mod(std::span<std::uint32_t> row, std::uint32_t factor, std::uint32_t p) noexcept {
#if PROFILIUM_X86
    if (selected_isa(p) == Isa::Avx2) {
        avx2::scale_mod(row, factor, p);
        return;
    }
#endif
    scalar::scale_mod(row, factor, p);
}

}  // namespace profilium::simd

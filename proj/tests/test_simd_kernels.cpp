#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "profilium/linalg.hpp"
#include "profilium/simd_kernels.hpp"

namespace simd = profilium::simd;

namespace {

std::vector<std::uint32_t> random_row(std::mt19937& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 251, 257, 8191, 32749};

}  // namespace

TEST(SimdKernels, AxpyMatchesScalar) {
    if (!simd::cpu_has_avx2()) GTEST_SKIP() << "no AVX2 on this CPU";
    std::mt19937 rng(7);
    for (auto p : kPrimes) {
        for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 100u}) {
            for (int rep = 0; rep < 20; ++rep) {
                auto dst = random_row(rng, n, p);
                const auto src = random_row(rng, n, p);
                const std::uint32_t f = random_row(rng, 1, p)[0];
                auto ref = dst;
                simd::scalar::axpy_mod(ref, src, f, p);
                simd::avx2::axpy_mod(dst, src, f, p);
                ASSERT_EQ(ref, dst) << "p=" << p << " n=" << n;
            }
        }
    }
}

TEST(SimdKernels, ScaleMatchesScalar) {
    if (!simd::cpu_has_avx2()) GTEST_SKIP() << "no AVX2 on this CPU";
    std::mt19937 rng(8);
    for (auto p : kPrimes) {
        for (std::size_t n : {0u, 3u, 8u, 17u, 64u}) {
            auto row = random_row(rng, n, p);
            const std::uint32_t f = random_row(rng, 1, p)[0];
            auto ref = row;
            simd::scalar::scale_mod(ref, f, p);
            simd::avx2::scale_mod(row, f, p);
            ASSERT_EQ(ref, row) << "p=" << p << " n=" << n;
        }
    }
}

TEST(SimdKernels, ScalarReferenceIsExact) {
    std::mt19937 rng(9);
    for (auto p : kPrimes) {
        auto dst = random_row(rng, 40, p);
        const auto src = random_row(rng, 40, p);
        const std::uint32_t f = p - 1;
        auto out = dst;
        simd::scalar::axpy_mod(out, src, f, p);
        for (std::size_t i = 0; i < dst.size(); ++i) {
            EXPECT_EQ(out[i], (static_cast<std::uint64_t>(dst[i]) + std::uint64_t{f} * src[i]) % p);
        }
    }
}

TEST(SimdKernels, DispatchRespectsModulusLimit) {
    EXPECT_EQ(simd::selected_isa(simd::kVectorModulusLimit + 3), simd::Isa::Scalar);
    simd::force_scalar(true);
    EXPECT_EQ(simd::selected_isa(3), simd::Isa::Scalar);
    simd::force_scalar(false);
    if (simd::cpu_has_avx2()) EXPECT_EQ(simd::selected_isa(3), simd::Isa::Avx2);
    EXPECT_EQ(simd::isa_name(simd::Isa::Scalar), "scalar");
}

TEST(SimdKernels, EliminationAgreesAcrossPaths) {
    using profilium::Coefficients;
    using profilium::ExactMatrix;
    std::mt19937 rng(10);
    for (auto p : {2u, 3u, 101u}) {
        const auto f = Coefficients::prime_field(p);
        for (int rep = 0; rep < 30; ++rep) {
            std::uniform_int_distribution<long> d(0, p - 1);
            ExactMatrix a(f, 9, 13);
            for (std::size_t r = 0; r < 9; ++r)
                for (std::size_t c = 0; c < 13; ++c) a.set(r, c, d(rng));
            simd::force_scalar(true);
            const auto rk_s = profilium::rank(a);
            const auto ker_s = profilium::kernel(a);
            simd::force_scalar(false);
            EXPECT_EQ(rk_s, profilium::rank(a));
            EXPECT_EQ(ker_s, profilium::kernel(a));
        }
    }
}

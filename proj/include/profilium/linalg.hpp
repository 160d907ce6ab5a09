#pragma once

// Exact matrices over Z, F_p and Z/p^k.
//
// Entries are arbitrary precision integers. Over F_p and Z/p^k they are kept
// as canonical residues in [0, modulus). Elimination over F_p runs on packed
// 32-bit residues through the row kernels in simd_kernels.hpp.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace profilium {

using BigInt = mpz_class;

bool is_prime(std::uint64_t n) noexcept;

class Coefficients {
public:
    enum class Kind { Integers, PrimeField, CyclicRing };

    static Coefficients integers() noexcept { return Coefficients(Kind::Integers, 0, 0); }
    /// Throws ContractError unless p is a prime below 2^31.
    static Coefficients prime_field(std::uint32_t p);
    /// Z/p^k. Throws ContractError unless p is prime, k >= 1 and p^k < 2^31.
    static Coefficients cyclic_ring(std::uint32_t p, std::uint32_t k);

    Kind kind() const noexcept { return kind_; }
    std::uint32_t prime() const noexcept { return p_; }
    std::uint32_t exponent() const noexcept { return k_; }
    /// 0 for the integers.
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_modular() const noexcept { return kind_ != Kind::Integers; }

    /// Reduce an integer to its canonical representative.
    BigInt reduce(const BigInt& x) const;

    std::string to_string() const;
    friend bool operator==(const Coefficients&, const Coefficients&) = default;

private:
    Coefficients(Kind kind, std::uint32_t p, std::uint32_t k);
    Kind kind_;
    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t modulus_;
};

class ExactMatrix {
public:
    ExactMatrix() : ExactMatrix(Coefficients::integers(), 0, 0) {}
    ExactMatrix(Coefficients coefficients, std::size_t rows, std::size_t cols);
    /// Row-major entries; reduced to canonical residues. Throws ContractError on a size mismatch.
    ExactMatrix(Coefficients coefficients, std::size_t rows, std::size_t cols,
                std::vector<BigInt> entries);
    ExactMatrix(Coefficients coefficients, std::size_t rows, std::size_t cols,
                std::initializer_list<long> entries);

    static ExactMatrix identity(Coefficients coefficients, std::size_t n);

    const Coefficients& coefficients() const noexcept { return coefficients_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const BigInt& value);
    const std::vector<BigInt>& entries() const noexcept { return entries_; }

    bool is_zero() const;
    ExactMatrix transposed() const;
    ExactMatrix column(std::size_t c) const;
    /// Same entries read over other coefficients (re-reduced).
    ExactMatrix with_coefficients(Coefficients coefficients) const;
    ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    Coefficients coefficients_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);
/// Diagonal rows x cols matrix carrying d on its leading diagonal.
ExactMatrix diagonal(Coefficients coefficients, std::size_t rows, std::size_t cols,
                     const std::vector<BigInt>& d);

struct SnfResult {
    /// Nonzero invariant factors, each dividing the next. Over Z/p^k these are p^e with e < k.
    std::vector<BigInt> d;
    ExactMatrix u;
    ExactMatrix v;
};

/// Smith normal form u*a*v = diag(d). Integers or CyclicRing only.
SnfResult snf(const ExactMatrix& a);

std::size_t rank(const ExactMatrix& a);

/// Some x with a*x = b, or nullopt.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

/// Columns generate {x : a*x = 0}. Over F_p they form a basis.
ExactMatrix kernel(const ExactMatrix& a);

/// Columns generate the column span of a. Over F_p they form a basis.
ExactMatrix image(const ExactMatrix& a);

/// Column span equals the whole target (coefficients)^rows.
bool is_surjective(const ExactMatrix& a);

/// Determinant of a square matrix, reduced over the coefficients.
BigInt determinant(const ExactMatrix& a);

/// Largest e with p^e | x, capped at cap (x = 0 gives cap).
std::uint32_t valuation(const BigInt& x, std::uint32_t p, std::uint32_t cap);

/// Inverse of a unit modulo m.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

}  // namespace profilium

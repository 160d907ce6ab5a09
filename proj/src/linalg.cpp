#include "profilium/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "profilium/errors.hpp"
#include "profilium/simd_kernels.hpp"

namespace profilium {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

constexpr std::uint64_t kModulusLimit = 1ull << 31;

std::uint64_t checked_power(std::uint32_t p, std::uint32_t k) {
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        m *= p;
        if (m >= kModulusLimit) {
            throw ContractError("Z/p^k modulus must stay below 2^31");
        }
    }
    return m;
}

BigInt big(std::uint64_t x) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
    return r;
}

std::uint32_t small(const BigInt& x) { return static_cast<std::uint32_t>(x.get_ui()); }

// Public entry points reject integer inputs that are not bounded by 2^31.
void require_bounded(const ExactMatrix& a, const char* op) {
    if (a.coefficients().kind() != Coefficients::Kind::Integers) return;
    static const BigInt bound = BigInt(1) << 31;
    for (const auto& x : a.entries()) {
        if (abs(x) >= bound) {
            throw ContractError(std::string(op) + ": integer entries must satisfy |x| < 2^31");
        }
    }
}

// ---------------------------------------------------------------------------
// F_p elimination on packed residues

std::uint32_t inverse_fp(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        const std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

struct FpRref {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint32_t p = 2;
    std::vector<std::uint32_t> data;
    std::vector<std::size_t> pivot_cols;

    std::span<std::uint32_t> row(std::size_t r) { return {data.data() + r * cols, cols}; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

FpRref pack(const ExactMatrix& a) {
    FpRref w;
    w.rows = a.rows();
    w.cols = a.cols();
    w.p = a.coefficients().prime();
    w.data.reserve(a.entries().size());
    for (const auto& x : a.entries()) w.data.push_back(small(x));
    return w;
}

// Reduced row echelon form; only the first `limit` columns are used as pivots.
void reduce(FpRref& w, std::size_t limit) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < limit && rank < w.rows; ++c) {
        std::size_t r = rank;
        while (r < w.rows && w.at(r, c) == 0) ++r;
        if (r == w.rows) continue;
        if (r != rank) {
            std::swap_ranges(w.row(r).begin(), w.row(r).end(), w.row(rank).begin());
        }
        simd::scale_mod(w.row(rank), inverse_fp(w.at(rank, c), w.p), w.p);
        for (std::size_t i = 0; i < w.rows; ++i) {
            if (i == rank) continue;
            const std::uint32_t x = w.at(i, c);
            if (x != 0) simd::axpy_mod(w.row(i), w.row(rank), w.p - x, w.p);
        }
        w.pivot_cols.push_back(c);
        ++rank;
    }
}

// ---------------------------------------------------------------------------
// Smith normal form, integers and Z/p^k

struct Work {
    std::size_t m, n;
    std::vector<BigInt> a;
    std::vector<BigInt> u;  // m x m
    std::vector<BigInt> v;  // n x n
    BigInt modulus;         // 0 over Z

    BigInt& A(std::size_t i, std::size_t j) { return a[i * n + j]; }
    void norm(BigInt& x) const {
        if (modulus != 0) {
            x %= modulus;
            if (x < 0) x += modulus;
        }
    }
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(a[i * n + c], a[j * n + c]);
        for (std::size_t c = 0; c < m; ++c) std::swap(u[i * m + c], u[j * m + c]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(a[r * n + i], a[r * n + j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(v[r * n + i], v[r * n + j]);
    }
    // row_i += f * row_j
    void add_row(std::size_t i, std::size_t j, const BigInt& f) {
        for (std::size_t c = 0; c < n; ++c) {
            a[i * n + c] += f * a[j * n + c];
            norm(a[i * n + c]);
        }
        for (std::size_t c = 0; c < m; ++c) {
            u[i * m + c] += f * u[j * m + c];
            norm(u[i * m + c]);
        }
    }
    // col_i += f * col_j
    void add_col(std::size_t i, std::size_t j, const BigInt& f) {
        for (std::size_t r = 0; r < m; ++r) {
            a[r * n + i] += f * a[r * n + j];
            norm(a[r * n + i]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            v[r * n + i] += f * v[r * n + j];
            norm(v[r * n + i]);
        }
    }
    void scale_row(std::size_t i, const BigInt& f) {
        for (std::size_t c = 0; c < n; ++c) {
            a[i * n + c] *= f;
            norm(a[i * n + c]);
        }
        for (std::size_t c = 0; c < m; ++c) {
            u[i * m + c] *= f;
            norm(u[i * m + c]);
        }
    }
};

Work start(const ExactMatrix& src) {
    Work w{src.rows(), src.cols(), src.entries(), {}, {}, 0};
    w.u.assign(w.m * w.m, 0);
    w.v.assign(w.n * w.n, 0);
    for (std::size_t i = 0; i < w.m; ++i) w.u[i * w.m + i] = 1;
    for (std::size_t i = 0; i < w.n; ++i) w.v[i * w.n + i] = 1;
    if (src.coefficients().is_modular()) w.modulus = big(src.coefficients().modulus());
    return w;
}

SnfResult finish(Work& w, std::size_t r, const Coefficients& c) {
    SnfResult out;
    for (std::size_t t = 0; t < r; ++t) out.d.push_back(w.A(t, t));
    out.u = ExactMatrix(c, w.m, w.m, std::move(w.u));
    out.v = ExactMatrix(c, w.n, w.n, std::move(w.v));
    return out;
}

SnfResult snf_integers(const ExactMatrix& src) {
    Work w = start(src);
    const std::size_t lim = std::min(w.m, w.n);
    std::size_t t = 0;
    auto move_min_to_pivot = [&](bool whole) -> bool {
        std::size_t bi = w.m, bj = w.n;
        for (std::size_t i = t; i < w.m; ++i) {
            for (std::size_t j = t; j < w.n; ++j) {
                if (!whole && i != t && j != t) continue;
                const BigInt& x = w.A(i, j);
                if (x == 0) continue;
                if (bi == w.m || abs(x) < abs(w.A(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        }
        if (bi == w.m) return false;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        return true;
    };
    for (; t < lim; ++t) {
        if (!move_min_to_pivot(true)) break;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < w.m; ++i) {
                if (w.A(i, t) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), w.A(i, t).get_mpz_t(), w.A(t, t).get_mpz_t());
                w.add_row(i, t, -q);
                if (w.A(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < w.n; ++j) {
                if (w.A(t, j) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), w.A(t, j).get_mpz_t(), w.A(t, t).get_mpz_t());
                w.add_col(j, t, -q);
                if (w.A(t, j) != 0) clean = false;
            }
            if (!clean) {
                move_min_to_pivot(false);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < w.m && divides; ++i) {
                for (std::size_t j = t + 1; j < w.n; ++j) {
                    if (!mpz_divisible_p(w.A(i, j).get_mpz_t(), w.A(t, t).get_mpz_t())) {
                        w.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }
        if (w.A(t, t) < 0) w.scale_row(t, -1);
    }
    return finish(w, t, src.coefficients());
}

SnfResult snf_cyclic(const ExactMatrix& src) {
    const std::uint32_t p = src.coefficients().prime();
    const std::uint32_t k = src.coefficients().exponent();
    Work w = start(src);
    const std::size_t lim = std::min(w.m, w.n);
    std::size_t t = 0;
    for (; t < lim; ++t) {
        std::size_t bi = w.m, bj = w.n;
        std::uint32_t best = k;
        for (std::size_t i = t; i < w.m && best > 0; ++i) {
            for (std::size_t j = t; j < w.n; ++j) {
                const std::uint32_t e = valuation(w.A(i, j), p, k);
                if (e < best) {
                    best = e;
                    bi = i;
                    bj = j;
                    if (e == 0) break;
                }
            }
        }
        if (bi == w.m) break;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        BigInt pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, best);
        const BigInt unit = w.A(t, t) / pe;
        w.scale_row(t, inverse_mod(unit, w.modulus));
        for (std::size_t i = t + 1; i < w.m; ++i) {
            if (w.A(i, t) != 0) w.add_row(i, t, -(w.A(i, t) / pe));
        }
        for (std::size_t j = t + 1; j < w.n; ++j) {
            if (w.A(t, j) != 0) w.add_col(j, t, -(w.A(t, j) / pe));
        }
    }
    return finish(w, t, src.coefficients());
}

SnfResult snf_impl(const ExactMatrix& a) {
    switch (a.coefficients().kind()) {
        case Coefficients::Kind::Integers: return snf_integers(a);
        case Coefficients::Kind::CyclicRing: return snf_cyclic(a);
        case Coefficients::Kind::PrimeField: break;
    }
    throw ContractError("snf: use rank over a prime field");
}

// Divide c by the invariant factor d, or nullopt when d does not divide c.
std::optional<BigInt> divide_by_factor(const BigInt& c, const BigInt& d, const Coefficients& coef) {
    if (coef.kind() == Coefficients::Kind::Integers) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        return BigInt(c / d);
    }
    const std::uint32_t e = valuation(d, coef.prime(), coef.exponent());
    if (valuation(c, coef.prime(), coef.exponent()) < e) return std::nullopt;
    return BigInt(c / d);
}

}  // namespace

// ---------------------------------------------------------------------------

Coefficients::Coefficients(Kind kind, std::uint32_t p, std::uint32_t k)
    : kind_(kind), p_(p), k_(k), modulus_(0) {
    if (kind == Kind::PrimeField) modulus_ = p;
    if (kind == Kind::CyclicRing) modulus_ = checked_power(p, k);
}

Coefficients Coefficients::prime_field(std::uint32_t p) {
    if (p >= kModulusLimit || !is_prime(p)) {
        throw ContractError("prime field modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    return Coefficients(Kind::PrimeField, p, 1);
}

Coefficients Coefficients::cyclic_ring(std::uint32_t p, std::uint32_t k) {
    if (p >= kModulusLimit || !is_prime(p)) {
        throw ContractError("Z/p^k needs a prime p, got " + std::to_string(p));
    }
    if (k == 0) throw ContractError("Z/p^k needs k >= 1");
    return Coefficients(Kind::CyclicRing, p, k);
}

BigInt Coefficients::reduce(const BigInt& x) const {
    if (!is_modular()) return x;
    BigInt r = x % big(modulus_);
    if (r < 0) r += big(modulus_);
    return r;
}

std::string Coefficients::to_string() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::PrimeField: return "F_" + std::to_string(p_);
        case Kind::CyclicRing: return "Z/" + std::to_string(p_) + "^" + std::to_string(k_);
    }
    return "?";
}

ExactMatrix::ExactMatrix(Coefficients coefficients, std::size_t rows, std::size_t cols)
    : coefficients_(coefficients), rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(Coefficients coefficients, std::size_t rows, std::size_t cols,
                         std::vector<BigInt> entries)
    : coefficients_(coefficients), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw ContractError("matrix entry count " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (coefficients_.is_modular()) {
        for (auto& x : entries_) x = coefficients_.reduce(x);
    }
}

ExactMatrix::ExactMatrix(Coefficients coefficients, std::size_t rows, std::size_t cols,
                         std::initializer_list<long> entries)
    : ExactMatrix(coefficients, rows, cols, std::vector<BigInt>(entries.begin(), entries.end())) {}

ExactMatrix ExactMatrix::identity(Coefficients coefficients, std::size_t n) {
    ExactMatrix m(coefficients, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
    return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const BigInt& value) {
    entries_[r * cols_ + c] = coefficients_.reduce(value);
}

bool ExactMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& x) { return x == 0; });
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(coefficients_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

ExactMatrix ExactMatrix::with_coefficients(Coefficients coefficients) const {
    return ExactMatrix(coefficients, rows_, cols_, entries_);
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows,
                               std::size_t cols) const {
    if (r0 + rows > rows_ || c0 + cols > cols_) throw ContractError("block out of range");
    ExactMatrix b(coefficients_, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) b.entries_[r * cols + c] = (*this)(r0 + r, c0 + c);
    return b;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_ || !(a.coefficients_ == b.coefficients_)) {
        throw ContractError("matrix product: shape or coefficient mismatch");
    }
    ExactMatrix out(a.coefficients_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t t = 0; t < a.cols_; ++t) {
            const BigInt& x = a(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.entries_[i * b.cols_ + j] += x * b(t, j);
        }
    }
    if (out.coefficients_.is_modular()) {
        for (auto& x : out.entries_) x = out.coefficients_.reduce(x);
    }
    return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.coefficients_ == b.coefficients_)) {
        throw ContractError("matrix sum: shape or coefficient mismatch");
    }
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
        out.entries_[i] = out.coefficients_.reduce(out.entries_[i] + b.entries_[i]);
    }
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.coefficients_ == b.coefficients_)) {
        throw ContractError("matrix difference: shape or coefficient mismatch");
    }
    ExactMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
        out.entries_[i] = out.coefficients_.reduce(out.entries_[i] - b.entries_[i]);
    }
    return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.coefficients_ == b.coefficients_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ',';
            os << m(r, c);
        }
        os << ']';
    }
    return os << "] over " << m.coefficients().to_string();
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || !(a.coefficients() == b.coefficients())) {
        throw ContractError("hstack: row count or coefficient mismatch");
    }
    ExactMatrix out(a.coefficients(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
        for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
    }
    return out;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols() || !(a.coefficients() == b.coefficients())) {
        throw ContractError("vstack: column count or coefficient mismatch");
    }
    std::vector<BigInt> e = a.entries();
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    return ExactMatrix(a.coefficients(), a.rows() + b.rows(), a.cols(), std::move(e));
}

ExactMatrix diagonal(Coefficients coefficients, std::size_t rows, std::size_t cols,
                     const std::vector<BigInt>& d) {
    if (d.size() > std::min(rows, cols)) throw ContractError("diagonal: too many entries");
    ExactMatrix out(coefficients, rows, cols);
    for (std::size_t i = 0; i < d.size(); ++i) out.set(i, i, d[i]);
    return out;
}

SnfResult snf(const ExactMatrix& a) {
    require_bounded(a, "snf");
    return snf_impl(a);
}

std::size_t rank(const ExactMatrix& a) {
    if (a.coefficients().kind() == Coefficients::Kind::PrimeField) {
        FpRref w = pack(a);
        reduce(w, w.cols);
        return w.pivot_cols.size();
    }
    return snf_impl(a).d.size();
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || !(a.coefficients() == b.coefficients())) {
        throw ContractError("solve: a and b must share row count and coefficients");
    }
    require_bounded(a, "solve");
    require_bounded(b, "solve");
    const Coefficients& coef = a.coefficients();
    if (coef.kind() == Coefficients::Kind::PrimeField) {
        FpRref w = pack(hstack(a, b));
        reduce(w, w.cols);
        ExactMatrix x(coef, a.cols(), b.cols());
        for (std::size_t r = 0; r < w.pivot_cols.size(); ++r) {
            const std::size_t pc = w.pivot_cols[r];
            if (pc >= a.cols()) return std::nullopt;
            for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, w.at(r, a.cols() + j));
        }
        return x;
    }
    const SnfResult s = snf_impl(a);
    const ExactMatrix c = s.u * b;
    ExactMatrix y(coef, a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < s.d.size()) {
                auto q = divide_by_factor(c(i, j), s.d[i], coef);
                if (!q) return std::nullopt;
                y.set(i, j, *q);
            } else if (c(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.v * y;
}

ExactMatrix kernel(const ExactMatrix& a) {
    require_bounded(a, "kernel");
    const Coefficients& coef = a.coefficients();
    std::vector<ExactMatrix> cols;
    if (coef.kind() == Coefficients::Kind::PrimeField) {
        FpRref w = pack(a);
        reduce(w, w.cols);
        std::vector<bool> is_pivot(a.cols(), false);
        for (auto pc : w.pivot_cols) is_pivot[pc] = true;
        ExactMatrix out(coef, a.cols(), a.cols() - w.pivot_cols.size());
        std::size_t k = 0;
        for (std::size_t f = 0; f < a.cols(); ++f) {
            if (is_pivot[f]) continue;
            out.set(f, k, 1);
            for (std::size_t r = 0; r < w.pivot_cols.size(); ++r) {
                const std::uint32_t x = w.at(r, f);
                if (x != 0) out.set(w.pivot_cols[r], k, w.p - x);
            }
            ++k;
        }
        return out;
    }
    const SnfResult s = snf_impl(a);
    std::vector<std::pair<std::size_t, BigInt>> gens;
    for (std::size_t i = 0; i < a.cols(); ++i) {
        if (i < s.d.size()) {
            if (coef.kind() == Coefficients::Kind::Integers) continue;
            const std::uint32_t e = valuation(s.d[i], coef.prime(), coef.exponent());
            if (e == 0) continue;
            BigInt f;
            mpz_ui_pow_ui(f.get_mpz_t(), coef.prime(), coef.exponent() - e);
            gens.emplace_back(i, f);
        } else {
            gens.emplace_back(i, 1);
        }
    }
    ExactMatrix out(coef, a.cols(), gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t r = 0; r < a.cols(); ++r) out.set(r, g, s.v(r, gens[g].first) * gens[g].second);
    }
    return out;
}

ExactMatrix image(const ExactMatrix& a) {
    const Coefficients& coef = a.coefficients();
    if (coef.kind() == Coefficients::Kind::PrimeField) {
        FpRref w = pack(a);
        reduce(w, w.cols);
        ExactMatrix out(coef, a.rows(), w.pivot_cols.size());
        for (std::size_t k = 0; k < w.pivot_cols.size(); ++k)
            for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, k, a(r, w.pivot_cols[k]));
        return out;
    }
    require_bounded(a, "image");
    const SnfResult s = snf_impl(a);
    const ExactMatrix av = a * s.v;
    return av.block(0, 0, a.rows(), s.d.size());
}

bool is_surjective(const ExactMatrix& a) {
    if (a.rows() == 0) return true;
    if (a.cols() < a.rows() && a.coefficients().kind() == Coefficients::Kind::PrimeField) return false;
    if (a.coefficients().kind() == Coefficients::Kind::PrimeField) return rank(a) == a.rows();
    require_bounded(a, "is_surjective");
    const SnfResult s = snf_impl(a);
    return s.d.size() == a.rows() &&
           std::all_of(s.d.begin(), s.d.end(), [](const BigInt& x) { return x == 1; });
}

BigInt determinant(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw ContractError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return a.coefficients().reduce(1);
    // Bareiss fraction-free elimination on integer representatives.
    std::vector<BigInt> m = a.entries();
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r * n + k] == 0) ++r;
            if (r == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m[k * n + c], m[r * n + c]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            }
        }
        prev = m[k * n + k];
    }
    return a.coefficients().reduce(sign * m[n * n - 1]);
}

std::uint32_t valuation(const BigInt& x, std::uint32_t p, std::uint32_t cap) {
    if (x == 0) return cap;
    BigInt y = abs(x);
    std::uint32_t e = 0;
    while (e < cap && mpz_divisible_ui_p(y.get_mpz_t(), p)) {
        y /= p;
        ++e;
    }
    return e;
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw ContractError("inverse_mod: element is not a unit");
    }
    return r;
}

}  // namespace profilium

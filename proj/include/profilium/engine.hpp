#pragma once

// Decision core shared by the module families: subprojectivity and
// subinjectivity of single pairs, domains over a finite universe of
// indecomposables, and the basic / strongly soc-projective tests.
//
// A pair is decided from one presentation (or one envelope) of the target: M is
// N-subprojective iff postcomposition Hom(M, P) -> Hom(M, N) is onto for a single
// projective cover P -> N, and dually for envelopes.

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "profilium/ab_modules.hpp"
#include "profilium/errors.hpp"
#include "profilium/quiver.hpp"

namespace profilium {

enum class DomainKind { Subprojective, Subinjective };

/// "sp" or "si".
std::string_view kind_name(DomainKind kind) noexcept;
/// Throws ContractError for anything but "sp" / "si".
DomainKind parse_kind(std::string_view text);

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
    static Bitset full(std::size_t size);
    static Bitset single(std::size_t size, std::size_t i);

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool value = true);
    std::size_t count() const noexcept;
    bool none() const noexcept { return count() == 0; }
    bool all() const noexcept { return count() == size_; }
    bool subset_of(const Bitset& other) const;
    std::vector<std::size_t> members() const;
    /// One '0'/'1' per position, position 0 first.
    std::string to_string() const;

    Bitset& operator&=(const Bitset& o);
    Bitset& operator|=(const Bitset& o);
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;
    /// Total order used for deterministic class listings.
    friend bool operator<(const Bitset& a, const Bitset& b);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct DomainSet {
    std::string universe_id;
    Bitset bits;

    friend bool operator==(const DomainSet&, const DomainSet&) = default;
};

/// Plain-text verdict store keyed by (ring, m, n, kind). Safe for concurrent use.
class VerdictCache {
public:
    static constexpr std::string_view kVersion = "profilium-verdicts 1";

    VerdictCache() = default;
    /// Reads the file if it exists and carries the current version; otherwise starts empty.
    explicit VerdictCache(std::string path);

    std::optional<bool> lookup(const std::string& key) const;
    void store(const std::string& key, bool verdict);
    /// Writes back to the path given at construction (no-op without one).
    void save() const;
    std::size_t size() const;
    std::size_t hits() const noexcept { return hits_.load(); }

    static std::string key(std::string_view ring, std::string_view m, std::string_view n, DomainKind kind);

private:
    std::string path_;
    mutable std::mutex mutex_;
    std::map<std::string, bool> entries_;
    mutable std::atomic<std::size_t> hits_{0};
};

struct EngineOptions {
    unsigned workers = 1;
    VerdictCache* cache = nullptr;
};

/// Calls fn(i) for i in [0, count) on up to `workers` threads; results are stored by index.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned workers, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(workers, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

/// Universe bounds for the integers; ignored by the other families.
struct UniverseParams {
    std::vector<std::uint32_t> primes{2, 3};
    std::uint32_t max_exponent = 2;
    std::uint32_t free_rank = 1;
};

/// f.g. abelian groups (ring Z) or modules over the chain ring Z/p^k.
class AbelianCategory {
public:
    using Module = AbModule;

    /// Throws ContractError for a prime field or invalid universe bounds.
    explicit AbelianCategory(Coefficients ring, UniverseParams params = {});

    const Coefficients& ring() const noexcept { return ring_; }
    const UniverseParams& params() const noexcept { return params_; }
    std::string ring_spec() const;
    /// Ring spec plus the universe bounds.
    std::string universe_id() const;
    std::string family() const { return ring_.kind() == Coefficients::Kind::Integers ? "integers" : "chain-ring"; }

    const std::vector<Module>& universe() const noexcept { return universe_; }
    Module zero() const { return Module::zero(ring_); }
    /// R as a right module over itself.
    Module regular() const;
    /// Simple modules inside the universe.
    std::vector<Module> simples() const;

    Module sum(const Module& a, const Module& b) const { return direct_sum(a, b); }
    std::vector<Module> decompose(const Module& m) const { return indecomposable_summands(m); }
    bool hom_trivial(const Module& m, const Module& n) const { return hom(m, n).is_trivial(); }
    bool projective(const Module& m) const { return is_projective(m); }
    bool injective(const Module& m) const { return is_injective(m); }
    bool supports_envelopes() const noexcept { return ring_.kind() == Coefficients::Kind::CyclicRing; }

    ExactMatrix lift_matrix(const Module& m, const Module& n) const;
    /// Same test through a cover with one redundant free summand.
    ExactMatrix lift_matrix_padded(const Module& m, const Module& n) const;
    ExactMatrix extend_matrix(const Module& m, const Module& n) const;

    std::string format(const Module& m) const { return m.to_string(); }
    Module parse(std::string_view text) const { return parse_ab_module(text, ring_); }

private:
    Coefficients ring_;
    UniverseParams params_;
    std::vector<Module> universe_;
};

/// Representations of a type-A line quiver.
class QuiverCategory {
public:
    using Module = QuiverModule;

    explicit QuiverCategory(LineQuiver q);

    const LineQuiver& quiver() const noexcept { return q_; }
    std::string ring_spec() const { return q_.to_string(); }
    std::string universe_id() const { return q_.to_string(); }
    std::string family() const { return "quiver"; }

    const std::vector<Module>& universe() const noexcept { return universe_; }
    Module zero() const { return Module(q_.vertex_count(), {}); }
    Module regular() const;
    std::vector<Module> simples() const;

    Module sum(const Module& a, const Module& b) const { return direct_sum(a, b); }
    std::vector<Module> decompose(const Module& m) const { return indecomposable_summands(m); }
    bool hom_trivial(const Module& m, const Module& n) const { return hom_dim(q_, m, n) == 0; }
    bool projective(const Module& m) const { return is_projective(q_, m); }
    bool injective(const Module& m) const { return is_injective(q_, m); }
    bool supports_envelopes() const noexcept { return true; }

    ExactMatrix lift_matrix(const Module& m, const Module& n) const;
    ExactMatrix lift_matrix_padded(const Module& m, const Module& n) const;
    ExactMatrix extend_matrix(const Module& m, const Module& n) const;

    std::string format(const Module& m) const { return m.to_string(); }
    Module parse(std::string_view text) const { return parse_quiver_module(text, q_); }

private:
    LineQuiver q_;
    std::vector<Module> universe_;
};

template <class C>
concept ModuleCategory = requires(const C& c, const typename C::Module& m, std::string_view text) {
    { c.universe() } -> std::convertible_to<const std::vector<typename C::Module>&>;
    { c.universe_id() } -> std::convertible_to<std::string>;
    { c.ring_spec() } -> std::convertible_to<std::string>;
    { c.zero() } -> std::same_as<typename C::Module>;
    { c.regular() } -> std::same_as<typename C::Module>;
    { c.simples() } -> std::same_as<std::vector<typename C::Module>>;
    { c.sum(m, m) } -> std::same_as<typename C::Module>;
    { c.decompose(m) } -> std::same_as<std::vector<typename C::Module>>;
    { c.hom_trivial(m, m) } -> std::same_as<bool>;
    { c.projective(m) } -> std::same_as<bool>;
    { c.injective(m) } -> std::same_as<bool>;
    { c.supports_envelopes() } -> std::same_as<bool>;
    { c.lift_matrix(m, m) } -> std::same_as<ExactMatrix>;
    { c.lift_matrix_padded(m, m) } -> std::same_as<ExactMatrix>;
    { c.extend_matrix(m, m) } -> std::same_as<ExactMatrix>;
    { c.format(m) } -> std::same_as<std::string>;
    { c.parse(text) } -> std::same_as<typename C::Module>;
    { m.is_zero() } -> std::same_as<bool>;
};

static_assert(ModuleCategory<AbelianCategory>);
static_assert(ModuleCategory<QuiverCategory>);

template <ModuleCategory C>
bool is_subprojective(const C& c, const typename C::Module& m, const typename C::Module& n) {
    if (m.is_zero() || n.is_zero()) return true;
    return is_surjective(c.lift_matrix(m, n));
}

/// Decided through a deliberately non-minimal presentation of n.
template <ModuleCategory C>
bool is_subprojective_padded(const C& c, const typename C::Module& m, const typename C::Module& n) {
    if (m.is_zero() || n.is_zero()) return true;
    return is_surjective(c.lift_matrix_padded(m, n));
}

template <ModuleCategory C>
bool is_subinjective(const C& c, const typename C::Module& m, const typename C::Module& n) {
    if (!c.supports_envelopes()) {
        throw UnsupportedEnvelope("subinjectivity needs injective envelopes, which " + c.ring_spec() +
                                  " does not provide for finitely generated modules");
    }
    if (m.is_zero() || n.is_zero()) return true;
    return is_surjective(c.extend_matrix(m, n));
}

template <ModuleCategory C>
bool decide(const C& c, DomainKind kind, const typename C::Module& m, const typename C::Module& n,
            VerdictCache* cache = nullptr) {
    std::string key;
    if (cache) {
        key = VerdictCache::key(c.ring_spec(), c.format(m), c.format(n), kind);
        if (auto hit = cache->lookup(key)) return *hit;
    }
    const bool verdict = kind == DomainKind::Subprojective ? is_subprojective(c, m, n) : is_subinjective(c, m, n);
    if (cache) cache->store(key, verdict);
    return verdict;
}

/// Membership of every universe indecomposable in the domain of m.
template <ModuleCategory C>
DomainSet domain(const C& c, DomainKind kind, const typename C::Module& m, const EngineOptions& opt = {}) {
    if (kind == DomainKind::Subinjective && !c.supports_envelopes()) {
        throw UnsupportedEnvelope("subinjectivity domains need injective envelopes, which " + c.ring_spec() +
                                  " does not provide for finitely generated modules");
    }
    const auto& u = c.universe();
    const auto verdicts = parallel_map<char>(u.size(), opt.workers, [&](std::size_t i) -> char {
        return decide(c, kind, m, u[i], opt.cache) ? 1 : 0;
    });
    DomainSet d{c.universe_id(), Bitset(u.size())};
    for (std::size_t i = 0; i < u.size(); ++i) d.bits.set(i, verdicts[i] != 0);
    return d;
}

template <ModuleCategory C>
DomainSet subprojectivity_domain(const C& c, const typename C::Module& m, const EngineOptions& opt = {}) {
    return domain(c, DomainKind::Subprojective, m, opt);
}

template <ModuleCategory C>
DomainSet subinjectivity_domain(const C& c, const typename C::Module& m, const EngineOptions& opt = {}) {
    return domain(c, DomainKind::Subinjective, m, opt);
}

/// A module n in the domain iff all its summands are.
template <ModuleCategory C>
bool contains(const C& c, const DomainSet& d, const typename C::Module& n) {
    const auto& u = c.universe();
    for (const auto& part : c.decompose(n)) {
        bool found = false;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == part) {
                if (!d.bits.test(i)) return false;
                found = true;
                break;
            }
        }
        if (!found) throw ContractError("summand " + c.format(part) + " is outside the universe");
    }
    return true;
}

/// Positions of the universe members satisfying pred.
template <ModuleCategory C, class Pred>
Bitset universe_where(const C& c, Pred pred) {
    const auto& u = c.universe();
    Bitset b(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) b.set(i, pred(u[i]));
    return b;
}

template <ModuleCategory C>
Bitset projective_members(const C& c) {
    return universe_where(c, [&](const auto& n) { return c.projective(n); });
}

template <ModuleCategory C>
Bitset injective_members(const C& c) {
    return universe_where(c, [&](const auto& n) { return c.injective(n); });
}

/// {N : Hom(m, N) = 0} (sp) or {N : Hom(N, m) = 0} (si) inside the universe.
template <ModuleCategory C>
Bitset hom_vanishing(const C& c, DomainKind kind, const typename C::Module& m) {
    return universe_where(c, [&](const auto& n) {
        return kind == DomainKind::Subprojective ? c.hom_trivial(m, n) : c.hom_trivial(n, m);
    });
}

/// Hom(m, R) = 0, which makes the sp-domain of m the hom-vanishing class of m.
template <ModuleCategory C>
bool is_basic_sp(const C& c, const typename C::Module& m) {
    return m.is_zero() || c.hom_trivial(m, c.regular());
}

/// Every simple of the universe lies in the sp-domain of m.
template <ModuleCategory C>
bool is_strongly_soc_projective(const C& c, const typename C::Module& m, const EngineOptions& opt = {}) {
    const DomainSet d = subprojectivity_domain(c, m, opt);
    for (const auto& s : c.simples()) {
        if (!contains(c, d, s)) return false;
    }
    return true;
}

/// The summands of m that are not projective (sp) / not injective (si).
template <ModuleCategory C>
typename C::Module nontrivial_part(const C& c, DomainKind kind, const typename C::Module& m) {
    auto out = c.zero();
    for (const auto& part : c.decompose(m)) {
        const bool trivial = kind == DomainKind::Subprojective ? c.projective(part) : c.injective(part);
        if (!trivial) out = c.sum(out, part);
    }
    return out;
}

/// Direct sum of the universe members selected by a support bitset.
template <ModuleCategory C>
typename C::Module support_sum(const C& c, const Bitset& support) {
    auto out = c.zero();
    for (auto i : support.members()) out = c.sum(out, c.universe()[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Ring specs

using RingSpec = std::variant<Coefficients, LineQuiver>;
using AnyCategory = std::variant<AbelianCategory, QuiverCategory>;

/// `Z` | `Zmod:<p>^<k>` | `A<n>:<orientation>[;q=<p>]`.
RingSpec parse_ring_spec(std::string_view text);
AnyCategory make_category(const RingSpec& ring, const UniverseParams& params = {});
AnyCategory make_category(std::string_view ring_text, const UniverseParams& params = {});

}  // namespace profilium

#include "profilium/engine.hpp"

#include <bit>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace profilium {

std::string_view kind_name(DomainKind kind) noexcept {
    return kind == DomainKind::Subprojective ? "sp" : "si";
}

DomainKind parse_kind(std::string_view text) {
    if (text == "sp") return DomainKind::Subprojective;
    if (text == "si") return DomainKind::Subinjective;
    throw ContractError("kind must be 'sp' or 'si', got '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

Bitset Bitset::full(std::size_t size) {
    Bitset b(size);
    for (std::size_t i = 0; i < size; ++i) b.set(i);
    return b;
}

Bitset Bitset::single(std::size_t size, std::size_t i) {
    Bitset b(size);
    b.set(i);
    return b;
}

void Bitset::set(std::size_t i, bool value) {
    if (i >= size_) throw ContractError("Bitset index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= mask;
    else
        words_[i / 64] &= ~mask;
}

std::size_t Bitset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::subset_of(const Bitset& other) const {
    if (size_ != other.size_) throw ContractError("Bitset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::vector<std::size_t> Bitset::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

std::string Bitset::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    if (size_ != o.size_) throw ContractError("Bitset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    if (size_ != o.size_) throw ContractError("Bitset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

bool operator<(const Bitset& a, const Bitset& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.to_string() < b.to_string();
}

// ---------------------------------------------------------------------------

VerdictCache::VerdictCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    if (!std::getline(in, line) || line != kVersion) return;
    while (std::getline(in, line)) {
        const auto tab = line.rfind('\t');
        if (tab == std::string::npos || tab + 2 != line.size()) continue;
        const char v = line[tab + 1];
        if (v != '0' && v != '1') continue;
        entries_[line.substr(0, tab)] = v == '1';
    }
}

std::optional<bool> VerdictCache::lookup(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    ++hits_;
    return it->second;
}

void VerdictCache::store(const std::string& key, bool verdict) {
    std::lock_guard lock(mutex_);
    entries_[key] = verdict;
}

void VerdictCache::save() const {
    if (path_.empty()) return;
    std::lock_guard lock(mutex_);
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ContractError("cannot write cache file " + tmp);
        out << kVersion << '\n';
        for (const auto& [k, v] : entries_) out << k << '\t' << (v ? '1' : '0') << '\n';
    }
    if (std::rename(tmp.c_str(), path_.c_str()) != 0) throw ContractError("cannot replace cache file " + path_);
}

std::size_t VerdictCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::string VerdictCache::key(std::string_view ring, std::string_view m, std::string_view n, DomainKind kind) {
    std::string k;
    k.append(ring).append("|").append(m).append("|").append(n).append("|").append(kind_name(kind));
    return k;
}

// ---------------------------------------------------------------------------

AbelianCategory::AbelianCategory(Coefficients ring, UniverseParams params)
    : ring_(ring), params_(std::move(params)) {
    switch (ring_.kind()) {
        case Coefficients::Kind::PrimeField:
            throw ContractError("abelian family needs Z or Z/p^k, got " + ring_.to_string());
        case Coefficients::Kind::CyclicRing:
            for (std::uint32_t e = 1; e <= ring_.exponent(); ++e) universe_.push_back(Module::cyclic(ring_, ring_.prime(), e));
            break;
        case Coefficients::Kind::Integers: {
            std::set<std::uint32_t> seen;
            for (auto p : params_.primes) {
                if (!is_prime(p)) throw ContractError("prime support entry " + std::to_string(p) + " is not prime");
                if (!seen.insert(p).second) throw ContractError("prime support lists " + std::to_string(p) + " twice");
                BigInt order = 1;
                for (std::uint32_t e = 0; e < params_.max_exponent; ++e) {
                    order *= p;
                    if (order >= BigInt(1u << 31)) throw ContractError("prime power bound exceeds 2^31");
                }
            }
            std::sort(params_.primes.begin(), params_.primes.end());
            if (params_.free_rank >= 1) universe_.push_back(Module::free(1));
            std::vector<Module> torsion;
            for (auto p : params_.primes)
                for (std::uint32_t e = 1; e <= params_.max_exponent; ++e) torsion.push_back(Module::cyclic(ring_, p, e));
            std::stable_sort(torsion.begin(), torsion.end(), [](const Module& a, const Module& b) {
                return a.parts()[0].order() < b.parts()[0].order();
            });
            universe_.insert(universe_.end(), torsion.begin(), torsion.end());
            break;
        }
    }
}

std::string AbelianCategory::ring_spec() const {
    if (ring_.kind() == Coefficients::Kind::Integers) return "Z";
    return "Zmod:" + std::to_string(ring_.prime()) + "^" + std::to_string(ring_.exponent());
}

std::string AbelianCategory::universe_id() const {
    if (ring_.kind() != Coefficients::Kind::Integers) return ring_spec();
    std::string s = "Z[primes=";
    for (std::size_t i = 0; i < params_.primes.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(params_.primes[i]);
    }
    return s + ";maxexp=" + std::to_string(params_.max_exponent) + ";freerank=" + std::to_string(params_.free_rank) +
           "]";
}

AbModule AbelianCategory::regular() const {
    if (ring_.kind() == Coefficients::Kind::Integers) return Module::free(1);
    return Module::cyclic(ring_, ring_.prime(), ring_.exponent());
}

std::vector<AbModule> AbelianCategory::simples() const {
    std::vector<Module> out;
    if (ring_.kind() == Coefficients::Kind::CyclicRing) {
        out.push_back(Module::cyclic(ring_, ring_.prime(), 1));
    } else if (params_.max_exponent >= 1) {
        for (auto p : params_.primes) out.push_back(Module::cyclic(ring_, p, 1));
    }
    return out;
}

ExactMatrix AbelianCategory::lift_matrix(const Module& m, const Module& n) const {
    return postcomposition_matrix(m, projective_presentation(n));
}

ExactMatrix AbelianCategory::lift_matrix_padded(const Module& m, const Module& n) const {
    PresentationMap g = projective_presentation(n);
    g.cover = direct_sum(g.cover, regular());
    g.matrix = hstack(g.matrix, ExactMatrix(g.matrix.coefficients(), g.matrix.rows(), 1));
    return postcomposition_matrix(m, g);
}

ExactMatrix AbelianCategory::extend_matrix(const Module& m, const Module& n) const {
    return restriction_matrix(m, injective_envelope(n));
}

// ---------------------------------------------------------------------------

QuiverCategory::QuiverCategory(LineQuiver q) : q_(std::move(q)) {
    for (const auto& i : indecomposables(q_)) universe_.push_back(Module::indecomposable(q_.vertex_count(), i));
}

QuiverModule QuiverCategory::regular() const {
    std::vector<Interval> parts;
    for (std::size_t v = 0; v < q_.vertex_count(); ++v) parts.push_back(profilium::projective(q_, v));
    return Module(q_.vertex_count(), std::move(parts));
}

std::vector<QuiverModule> QuiverCategory::simples() const {
    std::vector<Module> out;
    for (std::size_t v = 0; v < q_.vertex_count(); ++v) out.push_back(Module::indecomposable(q_.vertex_count(), simple(v)));
    return out;
}

ExactMatrix QuiverCategory::lift_matrix(const Module& m, const Module& n) const {
    return postcomposition_matrix(q_, m, projective_cover(q_, n));
}

ExactMatrix QuiverCategory::lift_matrix_padded(const Module& m, const Module& n) const {
    return postcomposition_matrix(q_, m, canonical_presentation(q_, n));
}

ExactMatrix QuiverCategory::extend_matrix(const Module& m, const Module& n) const {
    return restriction_matrix(q_, m, injective_envelope(q_, n));
}

// ---------------------------------------------------------------------------

RingSpec parse_ring_spec(std::string_view text) {
    if (text == "Z") return Coefficients::integers();
    if (text.substr(0, 5) == "Zmod:") {
        std::size_t pos = 5;
        auto number = [&](const char* what) -> std::uint64_t {
            const std::size_t start = pos;
            std::uint64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                if (v >= (1ull << 31)) throw ParseError(std::string(what) + " too large", std::string(text.substr(start, pos - start + 1)), start);
                ++pos;
            }
            if (pos == start) {
                throw ParseError(std::string("expected ") + what,
                                 pos < text.size() ? std::string(1, text[pos]) : std::string("<end>"), pos);
            }
            return v;
        };
        const std::size_t prime_pos = pos;
        const std::uint64_t p = number("prime");
        if (pos >= text.size() || text[pos] != '^') {
            throw ParseError("expected '^'", pos < text.size() ? std::string(1, text[pos]) : std::string("<end>"), pos);
        }
        ++pos;
        const std::size_t exp_pos = pos;
        const std::uint64_t k = number("exponent");
        if (pos != text.size()) throw ParseError("trailing characters in ring spec", std::string(text.substr(pos)), pos);
        if (!is_prime(p)) throw ParseError("modulus base must be prime", std::to_string(p), prime_pos);
        if (k < 1) throw ParseError("exponent must be at least 1", std::to_string(k), exp_pos);
        try {
            return Coefficients::cyclic_ring(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
        } catch (const ContractError& e) {
            throw ParseError(e.what(), std::string(text.substr(5)), 5);
        }
    }
    if (!text.empty() && text[0] == 'A') return parse_line_quiver(text);
    throw ParseError("unknown ring family (expected Z, Zmod:p^k or A<n>:<orientation>)",
                     text.empty() ? std::string("<end>") : std::string(text.substr(0, 1)), 0);
}

AnyCategory make_category(const RingSpec& ring, const UniverseParams& params) {
    if (const auto* c = std::get_if<Coefficients>(&ring)) return AbelianCategory(*c, params);
    return QuiverCategory(std::get<LineQuiver>(ring));
}

AnyCategory make_category(std::string_view ring_text, const UniverseParams& params) {
    return make_category(parse_ring_spec(ring_text), params);
}

}  // namespace profilium

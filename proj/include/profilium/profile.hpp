#pragma once

// sp- and si-profiles over a finite universe: the classes realized as domains,
// ordered by inclusion.
//
// Domains of sums are intersections of summand domains, so the classes are the
// meet-closure of the indecomposable domains together with the full universe
// (the domain of 0). The closure is built breadth first from the top, which
// also fixes one canonical witness support per class.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "profilium/engine.hpp"

namespace profilium {

struct ProfileClass {
    Bitset members;
    /// Support of the canonical witness (the first support reaching the class).
    Bitset witness_support;
    std::string witness;
    /// Universe positions whose own domain is this class.
    std::vector<std::size_t> indecomposable_witnesses;
};

struct MaximalMember {
    std::string module;
    /// Domain equals {N : module is not a summand of N} inside the universe.
    bool summand_characterized = false;
    /// The class of the module is covered by the top.
    bool coatom = false;
};

struct Profile {
    DomainKind kind = DomainKind::Subprojective;
    std::string ring;
    std::string universe_id;
    std::vector<std::string> universe;
    /// Ordered by decreasing cardinality, then by membership string.
    std::vector<ProfileClass> classes;
    /// Cover relations (lower, upper) of the inclusion order.
    std::vector<std::pair<std::size_t, std::size_t>> hasse;
    std::size_t top = 0;
    std::optional<std::size_t> minimum;
    std::vector<std::size_t> coatoms;
    /// Domain of each universe member, in universe order.
    std::vector<Bitset> indecomposable_domains;
    /// Projective (sp) or injective (si) universe members.
    Bitset baseline;

    std::optional<std::size_t> class_of(const Bitset& members) const;
};

/// Classes, order and extremal elements from the indecomposable domains.
/// `format_support` renders a witness support as a module literal.
template <class Format>
Profile assemble_profile(DomainKind kind, std::string ring, std::string universe_id,
                         std::vector<std::string> universe, std::vector<Bitset> domains, Bitset baseline,
                         Format format_support);

Profile assemble_profile_impl(DomainKind kind, std::string ring, std::string universe_id,
                              std::vector<std::string> universe, std::vector<Bitset> domains, Bitset baseline);

template <class Format>
Profile assemble_profile(DomainKind kind, std::string ring, std::string universe_id,
                         std::vector<std::string> universe, std::vector<Bitset> domains, Bitset baseline,
                         Format format_support) {
    Profile p = assemble_profile_impl(kind, std::move(ring), std::move(universe_id), std::move(universe),
                                      std::move(domains), std::move(baseline));
    for (auto& c : p.classes) c.witness = format_support(c.witness_support);
    return p;
}

template <ModuleCategory C>
Profile build_profile(const C& c, DomainKind kind, const EngineOptions& opt = {}) {
    const auto& u = c.universe();
    std::vector<Bitset> domains;
    if (kind == DomainKind::Subinjective && !c.supports_envelopes()) {
        throw UnsupportedEnvelope("si-profile needs injective envelopes, which " + c.ring_spec() +
                                  " does not provide for finitely generated modules");
    }
    const std::size_t n = u.size();
    const auto verdicts = parallel_map<char>(n * n, opt.workers, [&](std::size_t k) -> char {
        return decide(c, kind, u[k / n], u[k % n], opt.cache) ? 1 : 0;
    });
    for (std::size_t i = 0; i < n; ++i) {
        Bitset d(n);
        for (std::size_t j = 0; j < n; ++j) d.set(j, verdicts[i * n + j] != 0);
        domains.push_back(std::move(d));
    }
    std::vector<std::string> literals;
    for (const auto& m : u) literals.push_back(c.format(m));
    Bitset baseline = kind == DomainKind::Subprojective ? projective_members(c) : injective_members(c);
    return assemble_profile(kind, c.ring_spec(), c.universe_id(), std::move(literals), std::move(domains),
                            std::move(baseline), [&](const Bitset& s) { return c.format(support_sum(c, s)); });
}

/// Witnesses (canonical and indecomposable) of the class equal to the baseline.
std::vector<std::string> poor_modules(const Profile& p);
inline std::vector<std::string> sp_poor_modules(const Profile& p) { return poor_modules(p); }
inline std::vector<std::string> si_poor_modules(const Profile& p) { return poor_modules(p); }

/// Coatom witnesses, plus every universe member whose domain is the complement of itself.
std::vector<MaximalMember> maximal_members(const Profile& p);

/// Every pairwise meet is a class.
bool is_meet_closed(const Profile& p);

}  // namespace profilium

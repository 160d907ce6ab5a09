#include "profilium/profile.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace profilium {

std::optional<std::size_t> Profile::class_of(const Bitset& members) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].members == members) return i;
    return std::nullopt;
}

Profile assemble_profile_impl(DomainKind kind, std::string ring, std::string universe_id,
                              std::vector<std::string> universe, std::vector<Bitset> domains, Bitset baseline) {
    const std::size_t n = universe.size();
    if (domains.size() != n) throw ContractError("assemble_profile: one domain per universe member required");

    // Breadth-first meet-closure from the top; the first support reaching a class is its witness.
    std::map<std::string, std::size_t> seen;
    std::vector<ProfileClass> found;
    std::deque<std::size_t> queue;
    auto visit = [&](Bitset members, Bitset support) {
        const std::string key = members.to_string();
        if (seen.count(key)) return;
        seen.emplace(key, found.size());
        queue.push_back(found.size());
        found.push_back({std::move(members), std::move(support), {}, {}});
    };
    visit(Bitset::full(n), Bitset(n));
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            Bitset support = found[k].witness_support;
            support.set(i);
            visit(found[k].members & domains[i], std::move(support));
        }
    }

    std::sort(found.begin(), found.end(), [](const ProfileClass& a, const ProfileClass& b) {
        if (a.members.count() != b.members.count()) return a.members.count() > b.members.count();
        return b.members < a.members;
    });
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& c : found) {
            if (c.members == domains[i]) {
                c.indecomposable_witnesses.push_back(i);
                break;
            }
        }
    }

    Profile p;
    p.kind = kind;
    p.ring = std::move(ring);
    p.universe_id = std::move(universe_id);
    p.universe = std::move(universe);
    p.classes = std::move(found);
    p.indecomposable_domains = std::move(domains);
    p.baseline = std::move(baseline);
    p.top = 0;  // the full set sorts first

    const std::size_t k = p.classes.size();
    auto strictly_below = [&](std::size_t a, std::size_t b) {
        return a != b && p.classes[a].members.subset_of(p.classes[b].members);
    };
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            if (!strictly_below(a, b)) continue;
            bool covered = true;
            for (std::size_t c = 0; c < k && covered; ++c) {
                if (strictly_below(a, c) && strictly_below(c, b)) covered = false;
            }
            if (covered) p.hasse.emplace_back(a, b);
        }
    }
    for (const auto& [lo, hi] : p.hasse)
        if (hi == p.top) p.coatoms.push_back(lo);

    Bitset meet = Bitset::full(n);
    for (const auto& c : p.classes) meet &= c.members;
    p.minimum = p.class_of(meet);
    return p;
}

std::vector<std::string> poor_modules(const Profile& p) {
    std::vector<std::string> out;
    auto add = [&](const std::string& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    const auto k = p.class_of(p.baseline);
    if (!k) return out;
    const auto& c = p.classes[*k];
    add(c.witness);
    for (auto i : c.indecomposable_witnesses) add(p.universe[i]);
    return out;
}

std::vector<MaximalMember> maximal_members(const Profile& p) {
    const std::size_t n = p.universe.size();
    auto summand_characterized = [&](std::size_t i) {
        Bitset complement = Bitset::full(n);
        complement.set(i, false);
        return p.indecomposable_domains[i] == complement;
    };
    auto is_coatom = [&](const Bitset& members) {
        const auto k = p.class_of(members);
        return k && std::find(p.coatoms.begin(), p.coatoms.end(), *k) != p.coatoms.end();
    };
    std::vector<MaximalMember> out;
    auto add = [&](MaximalMember m) {
        for (auto& existing : out) {
            if (existing.module == m.module) {
                existing.summand_characterized = existing.summand_characterized || m.summand_characterized;
                return;
            }
        }
        out.push_back(std::move(m));
    };
    for (auto k : p.coatoms) {
        const auto& c = p.classes[k];
        add({c.witness, false, true});
        for (auto i : c.indecomposable_witnesses) add({p.universe[i], summand_characterized(i), true});
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (summand_characterized(i)) add({p.universe[i], true, is_coatom(p.indecomposable_domains[i])});
    }
    return out;
}

bool is_meet_closed(const Profile& p) {
    for (std::size_t a = 0; a < p.classes.size(); ++a)
        for (std::size_t b = a + 1; b < p.classes.size(); ++b)
            if (!p.class_of(p.classes[a].members & p.classes[b].members)) return false;
    return true;
}

}  // namespace profilium

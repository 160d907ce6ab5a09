#pragma once

// JSON / CSV / DOT renderings of domains, profiles and suite verdicts.
// Output is a pure function of the data: no timings, no addresses, sorted keys.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profilium/profile.hpp"
#include "profilium/verify.hpp"

namespace profilium {

enum class Format { Json, Csv, Dot };

/// Throws ContractError for anything but json / csv / dot.
Format parse_format(std::string_view text);

struct DomainEntry {
    std::string module;
    Bitset members;
};

struct DomainReport {
    std::string ring;
    std::string universe_id;
    DomainKind kind = DomainKind::Subprojective;
    std::vector<std::string> universe;
    std::vector<DomainEntry> domains;
    std::optional<Profile> profile;
};

/// Domains of every universe member plus the profile built from them.
DomainReport profile_report(const Profile& p);

std::string emit(const DomainReport& r, Format f);
/// DOT is not defined for verdicts; throws ContractError.
std::string emit(const std::vector<VerdictReport>& reports, Format f);

}  // namespace profilium

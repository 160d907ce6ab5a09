#include "profilium/report.hpp"

#include <sstream>

#include "json.hpp"

namespace profilium {

using nlohmann::json;

Format parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "dot") return Format::Dot;
    throw ContractError("format must be json, csv or dot, got '" + std::string(text) + "'");
}

DomainReport profile_report(const Profile& p) {
    DomainReport r{p.ring, p.universe_id, p.kind, p.universe, {}, p};
    for (std::size_t i = 0; i < p.universe.size(); ++i) r.domains.push_back({p.universe[i], p.indecomposable_domains[i]});
    return r;
}

namespace {

json member_list(const std::vector<std::string>& universe, const Bitset& b) {
    json out = json::array();
    for (auto i : b.members()) out.push_back(universe[i]);
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

json profile_json(const Profile& p) {
    json classes = json::array();
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        const auto& c = p.classes[i];
        json witnesses = json::array({c.witness});
        for (auto w : c.indecomposable_witnesses)
            if (p.universe[w] != c.witness) witnesses.push_back(p.universe[w]);
        classes.push_back({{"id", i},
                           {"members", member_list(p.universe, c.members)},
                           {"size", c.members.count()},
                           {"witness", c.witness},
                           {"witnesses", witnesses}});
    }
    json edges = json::array();
    for (const auto& [lo, hi] : p.hasse) edges.push_back(json::array({lo, hi}));
    json maximal = json::array();
    for (const auto& m : maximal_members(p)) {
        maximal.push_back({{"module", m.module}, {"coatom", m.coatom}, {"summand_characterized", m.summand_characterized}});
    }
    json out = {{"kind", std::string(kind_name(p.kind))},
                {"classes", classes},
                {"hasse_edges", edges},
                {"coatoms", p.coatoms},
                {"minimum", p.minimum ? json(*p.minimum) : json(nullptr)},
                {"top", p.top},
                {"maximal", maximal}};
    out[p.kind == DomainKind::Subprojective ? "sp_poor" : "si_poor"] = poor_modules(p);
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string emit(const DomainReport& r, Format f) {
    switch (f) {
        case Format::Json: {
            json domains = json::array();
            for (const auto& d : r.domains) domains.push_back({{"module", d.module}, {"members", member_list(r.universe, d.members)}});
            json out = {{"ring", r.ring},
                        {"universe_id", r.universe_id},
                        {"relative_to", "verdicts hold relative to the listed universe"},
                        {"kind", std::string(kind_name(r.kind))},
                        {"universe", r.universe},
                        {"domains", domains}};
            if (r.profile) out["profile"] = profile_json(*r.profile);
            return dump(out);
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "module,universe_member,in_domain\n";
            for (const auto& d : r.domains)
                for (std::size_t i = 0; i < r.universe.size(); ++i)
                    os << csv_field(d.module) << ',' << csv_field(r.universe[i]) << ',' << (d.members.test(i) ? 1 : 0)
                       << '\n';
            return os.str();
        }
        case Format::Dot: {
            if (!r.profile) throw ContractError("dot output is only defined for profiles");
            const auto& p = *r.profile;
            std::ostringstream os;
            os << "digraph profile {\n  rankdir=BT;\n";
            for (std::size_t i = 0; i < p.classes.size(); ++i) {
                os << "  c" << i << " [label=\"" << p.classes[i].members.count() << "\"];\n";
            }
            for (const auto& [lo, hi] : p.hasse) os << "  c" << lo << " -> c" << hi << ";\n";
            os << "}\n";
            return os.str();
        }
    }
    throw InternalError("emit: unknown format");
}

std::string emit(const std::vector<VerdictReport>& reports, Format f) {
    switch (f) {
        case Format::Json: {
            json suites = json::array();
            bool all = true;
            for (const auto& r : reports) {
                json checks = json::array();
                for (const auto& c : r.checks) {
                    json item = {{"proposition", c.proposition},
                                 {"instance", c.instance},
                                 {"pass", c.pass},
                                 {"applicable", c.applicable}};
                    if (!c.counterexample.empty()) item["counterexample"] = c.counterexample;
                    if (!c.detail.empty()) item["detail"] = c.detail;
                    checks.push_back(std::move(item));
                }
                all = all && r.passed();
                suites.push_back({{"suite", r.suite},
                                  {"ring", r.ring},
                                  {"universe_id", r.universe_id},
                                  {"passed", r.passed()},
                                  {"failures", r.failures()},
                                  {"checks", checks}});
            }
            return dump({{"passed", all}, {"suites", suites}});
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "ring,suite,proposition,instance,pass,applicable,counterexample\n";
            for (const auto& r : reports)
                for (const auto& c : r.checks)
                    os << csv_field(r.ring) << ',' << r.suite << ',' << csv_field(c.proposition) << ','
                       << csv_field(c.instance) << ',' << (c.pass ? 1 : 0) << ',' << (c.applicable ? 1 : 0) << ','
                       << csv_field(c.counterexample) << '\n';
            return os.str();
        }
        case Format::Dot:
            throw ContractError("dot output is only defined for profiles");
    }
    throw InternalError("emit: unknown format");
}

}  // namespace profilium

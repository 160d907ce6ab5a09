#include "profilium/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "profilium/engine.hpp"
#include "profilium/profile.hpp"
#include "profilium/report.hpp"
#include "profilium/verify.hpp"

namespace profilium {

namespace {

using nlohmann::json;

constexpr int kExitInternal = 3;
constexpr const char* kCacheEnv = "PROFILIUM_CACHE_DIR";
constexpr const char* kDefaultCacheName = "profilium-verdicts.txt";

struct Invocation {
    std::string subcommand;
    std::string ring;
    std::vector<std::string> modules;
    // Plain string positionals: CLI11 would read "[i,j]" as a list.
    std::string first;
    std::string second;
    std::string primes = "2,3";
    std::uint32_t max_exponent = 2;
    std::uint32_t free_rank = 1;
    std::string format;
    std::string kind = "sp";
    std::string suite = "all";
    std::string cache;
    unsigned workers = 0;
    std::string example;
};

std::vector<std::uint32_t> parse_primes(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    if (text.empty()) return out;
    for (;;) {
        const std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v >= (1ull << 31)) throw ParseError("prime too large", text.substr(start, pos - start + 1), start);
            ++pos;
        }
        if (pos == start) {
            throw ParseError("expected a prime in --primes", pos < text.size() ? text.substr(pos, 1) : "<end>", pos);
        }
        if (!is_prime(v)) throw ParseError("not a prime in --primes", text.substr(start, pos - start), start);
        out.push_back(static_cast<std::uint32_t>(v));
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' in --primes", text.substr(pos, 1), pos);
        ++pos;
    }
    return out;
}

std::string cache_path(const std::string& flag) {
    const char* dir = std::getenv(kCacheEnv);
    if (dir && *dir) {
        const std::string name =
            flag.empty() ? std::string(kDefaultCacheName) : std::filesystem::path(flag).filename().string();
        return (std::filesystem::path(dir) / name).string();
    }
    return flag;
}

/// Key/value rendering for the small commands.
std::string emit_record(const json& j, Format f) {
    if (f == Format::Json) return j.dump(2) + "\n";
    if (f == Format::Csv) {
        std::ostringstream os;
        os << "key,value\n";
        for (auto it = j.begin(); it != j.end(); ++it) {
            std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
            if (v.find_first_of(",\"\n") != std::string::npos) {
                std::string q = "\"";
                for (char c : v) {
                    if (c == '"') q += '"';
                    q += c;
                }
                v = q + "\"";
            }
            os << it.key() << ',' << v << '\n';
        }
        return os.str();
    }
    throw ContractError("dot output is only defined for profiles");
}

json literals(const std::vector<std::string>& universe, const Bitset& b) {
    json out = json::array();
    for (auto i : b.members()) out.push_back(universe[i]);
    return out;
}

class Dispatcher {
public:
    Dispatcher(const Invocation& inv, EngineOptions opt) : inv_(inv), opt_(opt) {}

    template <ModuleCategory C>
    int operator()(const C& c) {
        const std::string& sub = inv_.subcommand;
        if (sub == "universe") return universe(c);
        if (sub == "hom") return hom_cmd(c);
        if (sub == "domain") return domain_cmd(c);
        if (sub == "profile") return profile_cmd(c);
        if (sub == "tau" || sub == "tilting") return quiver_cmd(c);
        throw ContractError("unknown subcommand " + sub);
    }

    std::string output;

private:
    const Invocation& inv_;
    EngineOptions opt_;

    Format format(Format fallback = Format::Json) const {
        return inv_.format.empty() ? fallback : parse_format(inv_.format);
    }
    template <ModuleCategory C>
    typename C::Module module_arg(const C& c, std::size_t i) const {
        if (inv_.modules.size() <= i) throw ContractError(inv_.subcommand + ": missing module literal");
        return c.parse(inv_.modules[i]);
    }
    template <ModuleCategory C>
    std::vector<std::string> universe_literals(const C& c) const {
        std::vector<std::string> out;
        for (const auto& u : c.universe()) out.push_back(c.format(u));
        return out;
    }

    template <ModuleCategory C>
    int universe(const C& c) {
        const auto lits = universe_literals(c);
        if (format() == Format::Csv) {
            std::ostringstream os;
            os << "module,projective,injective\n";
            for (const auto& u : c.universe()) os << c.format(u) << ',' << c.projective(u) << ',' << c.injective(u) << '\n';
            output = os.str();
            return kExitOk;
        }
        json j = {{"ring", c.ring_spec()},
                  {"universe_id", c.universe_id()},
                  {"universe", lits},
                  {"projective", literals(lits, projective_members(c))},
                  {"simples", json::array()}};
        for (const auto& s : c.simples()) j["simples"].push_back(c.format(s));
        if (c.supports_envelopes()) j["injective"] = literals(lits, injective_members(c));
        output = emit_record(j, format());
        return kExitOk;
    }

    template <ModuleCategory C>
    int hom_cmd(const C& c) {
        const auto m = module_arg(c, 0), n = module_arg(c, 1);
        json j = {{"ring", c.ring_spec()}, {"source", c.format(m)}, {"target", c.format(n)}};
        if constexpr (std::is_same_v<C, QuiverCategory>) {
            const auto d = hom_dim(c.quiver(), m, n);
            j["dim"] = d;
            j["trivial"] = d == 0;
        } else {
            const HomBasis h = hom(m, n);
            json orders = json::array();
            for (const auto& o : h.orders) orders.push_back(o == 0 ? std::string("infinite") : o.get_str());
            j["generators"] = h.generators.size();
            j["orders"] = orders;
            j["cardinality"] = h.is_finite() ? h.cardinality().get_str() : std::string("infinite");
            j["trivial"] = h.is_trivial();
        }
        output = emit_record(j, format());
        return kExitOk;
    }

    template <ModuleCategory C>
    int domain_cmd(const C& c) {
        const DomainKind kind = parse_kind(inv_.kind);
        const auto m = module_arg(c, 0);
        const DomainSet d = domain(c, kind, m, opt_);
        DomainReport r{c.ring_spec(), c.universe_id(), kind, universe_literals(c), {{c.format(m), d.bits}}, std::nullopt};
        output = emit(r, format());
        return kExitOk;
    }

    template <ModuleCategory C>
    int profile_cmd(const C& c) {
        const Profile p = build_profile(c, parse_kind(inv_.kind), opt_);
        output = emit(profile_report(p), format());
        return kExitOk;
    }

    template <ModuleCategory C>
    int quiver_cmd(const C& c) {
        if constexpr (!std::is_same_v<C, QuiverCategory>) {
            throw ContractError(inv_.subcommand + " needs a quiver ring spec (A<n>:<orientation>), got " + c.ring_spec());
        } else {
            const auto& q = c.quiver();
            const auto m = module_arg(c, 0);
            json j = {{"ring", c.ring_spec()}, {"module", c.format(m)}};
            if (inv_.subcommand == "tau") {
                j["tau"] = c.format(tau(q, m));
                json dropped = json::array();
                for (const auto& part : c.decompose(m))
                    if (c.projective(part)) dropped.push_back(c.format(part));
                j["projective_summands_dropped"] = dropped;
            } else {
                std::vector<Interval> distinct;
                for (const auto& i : m.parts())
                    if (std::find(distinct.begin(), distinct.end(), i) == distinct.end()) distinct.push_back(i);
                j["tilting"] = is_tilting(q, m);
                j["ext1_self"] = ext1_dim(q, m, m);
                j["distinct_summands"] = distinct.size();
                j["vertices"] = q.vertex_count();
            }
            output = emit_record(j, format());
            return kExitOk;
        }
    }
};

std::string worked_example_a4(bool as_json, const EngineOptions& opt) {
    const QuiverCategory c(parse_line_quiver("A4:><>;q=2"));
    const auto& q = c.quiver();
    const std::size_t n = q.vertex_count();
    std::vector<std::string> lits;
    for (const auto& u : c.universe()) lits.push_back(c.format(u));
    QuiverModule e = c.zero();
    for (std::size_t v = 0; v < n; ++v) e = direct_sum(e, QuiverModule::indecomposable(n, injective(q, v)));
    const QuiverModule te = tau(q, e);
    const Bitset gen = universe_where(c, [&](const QuiverModule& x) { return is_generated_by(q, e, x); });
    const Bitset si = subinjectivity_domain(c, te, opt).bits;
    const bool poor = si == injective_members(c);

    json ar = json::array();
    for (const auto& u : c.universe()) {
        const auto t = tau(q, u.parts()[0]);
        ar.push_back({{"module", c.format(u)}, {"tau", t ? t->dim_string(n) : std::string("projective")}});
    }
    json pis = json::array();
    for (std::size_t v = 0; v < n; ++v)
        pis.push_back({{"vertex", v + 1}, {"P", projective(q, v).dim_string(n)}, {"I", injective(q, v).dim_string(n)}});

    if (as_json) {
        json j = {{"ring", q.to_string()},
                  {"indecomposables", lits},
                  {"ar_translate", ar},
                  {"projectives_injectives", pis},
                  {"E", c.format(e)},
                  {"tauE", c.format(te)},
                  {"E_tilting", is_tilting(q, e)},
                  {"gen_E", literals(lits, gen)},
                  {"si_domain_tauE", literals(lits, si)},
                  {"tauE_si_poor", poor}};
        return j.dump(2) + "\n";
    }

    std::ostringstream os;
    auto join = [&](const Bitset& b) {
        std::string s;
        for (auto i : b.members()) s += (s.empty() ? "" : " ") + lits[i];
        return s;
    };
    os << "ring = " << q.to_string() << "\n";
    os << "indecomposables =";
    for (const auto& l : lits) os << ' ' << l;
    os << "\n";
    for (const auto& item : ar) {
        os << "tau(" << item["module"].get<std::string>() << ") = " << item["tau"].get<std::string>() << "\n";
    }
    for (std::size_t v = 0; v < n; ++v) {
        os << "P(" << v + 1 << ") = " << projective(q, v).dim_string(n) << "  I(" << v + 1
           << ") = " << injective(q, v).dim_string(n) << "\n";
    }
    os << "E = " << c.format(e) << "\n";
    os << "tauE = " << c.format(te) << "\n";
    os << "E tilting = " << (is_tilting(q, e) ? "true" : "false") << "\n";
    os << "Gen(E) = " << join(gen) << "\n";
    os << "si-domain(tauE) = " << join(si) << "\n";
    os << "tauE si-poor = " << (poor ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    CLI::App app("Subprojectivity and subinjectivity domains over finite module universes", "profilium");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--ring", inv.ring, "Z | Zmod:<p>^<k> | A<n>:<orientation>[;q=<p>]");
    app.add_option("--primes", inv.primes, "prime support of the Z universe, comma separated");
    app.add_option("--maxexp", inv.max_exponent, "largest exponent of Z/p^e in the Z universe");
    app.add_option("--freerank", inv.free_rank, "free rank bound of the Z universe (0 drops Z)");
    app.add_option("--format", inv.format, "json | csv | dot");
    app.add_option("--workers", inv.workers, "worker threads (default: hardware concurrency)");
    app.add_option("--cache", inv.cache, "verdict cache file (directory overridable by PROFILIUM_CACHE_DIR)");

    auto* universe = app.add_subcommand("universe", "list the indecomposables of the universe");
    auto* hom_cmd = app.add_subcommand("hom", "describe Hom(M, N)");
    hom_cmd->add_option("M", inv.first, "source")->required();
    hom_cmd->add_option("N", inv.second, "target")->required();
    auto* domain_cmd = app.add_subcommand("domain", "domain of M over the universe");
    domain_cmd->add_option("M", inv.first, "module literal")->required();
    domain_cmd->add_option("--kind", inv.kind, "sp | si");
    auto* profile_cmd = app.add_subcommand("profile", "sp- or si-profile of the universe");
    profile_cmd->add_option("--kind", inv.kind, "sp | si");
    auto* tau_cmd = app.add_subcommand("tau", "Auslander-Reiten translate of a quiver module");
    tau_cmd->add_option("M", inv.first, "module literal")->required();
    auto* tilting_cmd = app.add_subcommand("tilting", "tilting test for a quiver module");
    tilting_cmd->add_option("M", inv.first, "module literal")->required();
    auto* verify_cmd = app.add_subcommand("verify", "run proposition suites (all standard instances without --ring)");
    verify_cmd->add_option("--suite", inv.suite, "S1..S16 or all");
    auto* example_cmd = app.add_subcommand("paper-example", "reproduce a worked example");
    example_cmd->add_option("name", inv.example, "a4")->required();
    (void)universe;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    for (auto* s : app.get_subcommands()) inv.subcommand = s->get_name();
    for (const auto* m : {&inv.first, &inv.second})
        if (!m->empty()) inv.modules.push_back(*m);

    try {
        EngineOptions opt;
        opt.workers = inv.workers ? inv.workers : std::max(1u, std::thread::hardware_concurrency());
        const std::string path = cache_path(inv.cache);
        std::optional<VerdictCache> cache;
        if (!path.empty()) {
            cache.emplace(path);
            opt.cache = &*cache;
        }
        UniverseParams params{parse_primes(inv.primes), inv.max_exponent, inv.free_rank};

        std::string output;
        int code = kExitOk;
        if (inv.subcommand == "paper-example") {
            if (inv.example != "a4") throw ContractError("unknown example '" + inv.example + "' (available: a4)");
            // Plain text by default; json on request.
            if (!inv.format.empty() && parse_format(inv.format) != Format::Json) {
                throw ContractError("paper-example prints text or json");
            }
            output = worked_example_a4(!inv.format.empty(), opt);
        } else if (inv.subcommand == "verify") {
            const Format f = inv.format.empty() ? Format::Json : parse_format(inv.format);
            if (inv.suite != "all") require_suite(inv.suite);
            std::vector<std::string> rings = inv.ring.empty() ? standard_instances() : std::vector<std::string>{inv.ring};
            std::vector<VerdictReport> reports;
            for (const auto& r : rings) {
                const AnyCategory c = make_category(r, params);
                if (inv.suite == "all") {
                    auto all = verify_all(c, opt);
                    reports.insert(reports.end(), all.begin(), all.end());
                } else {
                    reports.push_back(verify(inv.suite, c, opt));
                }
            }
            output = emit(reports, f);
            code = std::all_of(reports.begin(), reports.end(), [](const VerdictReport& r) { return r.passed(); })
                       ? kExitOk
                       : kExitSuiteFailure;
        } else {
            if (inv.ring.empty()) throw ContractError(inv.subcommand + " needs --ring");
            const AnyCategory c = make_category(inv.ring, params);
            Dispatcher d(inv, opt);
            code = std::visit([&](const auto& cat) { return d(cat); }, c);
            output = std::move(d.output);
        }
        if (cache) cache->save();
        out << output << std::flush;
        return code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedEnvelope& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace profilium

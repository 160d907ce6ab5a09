// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "profilium/cli.hpp"
#include "profilium/engine.hpp"
#include "profilium/profile.hpp"
#include "profilium/verify.hpp"

using namespace profilium;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

std::set<std::string> dims(const QuiverCategory& c, const Bitset& b) {
    std::set<std::string> out;
    for (auto i : b.members()) out.insert(c.format(c.universe()[i]));
    return out;
}

Outcome a4_golden() {
    Outcome o;
    const QuiverCategory c(parse_line_quiver("A4:><>;q=2"));
    const auto& q = c.quiver();
    std::set<std::string> lits;
    for (const auto& u : c.universe()) lits.insert(c.format(u));
    o.require(lits == std::set<std::string>{"1000", "0100", "0010", "0001", "1100", "0110", "0011", "1110", "0111", "1111"},
              "indecomposables");
    const std::vector<std::string> p{"1100", "0100", "0111", "0001"}, i{"1000", "1110", "0010", "0011"};
    for (std::size_t v = 0; v < 4; ++v) {
        o.require(projective(q, v).dim_string(4) == p[v], "P(" + std::to_string(v + 1) + ")");
        o.require(injective(q, v).dim_string(4) == i[v], "I(" + std::to_string(v + 1) + ")");
    }
    QuiverModule e = c.zero();
    for (std::size_t v = 0; v < 4; ++v) e = direct_sum(e, QuiverModule::indecomposable(4, injective(q, v)));
    const auto te = tau(q, e);
    std::set<std::string> parts;
    for (const auto& x : c.decompose(te)) parts.insert(c.format(x));
    o.require(parts == std::set<std::string>{"0110", "0111", "1100", "1111"} && te.length() == 4, "tauE = " + c.format(te));
    o.require(is_tilting(q, e), "E is not tilting");
    const std::set<std::string> inj(i.begin(), i.end());
    o.require(dims(c, universe_where(c, [&](const QuiverModule& x) { return is_generated_by(q, e, x); })) == inj, "Gen(E)");
    o.require(dims(c, subinjectivity_domain(c, te).bits) == inj, "si-domain(tauE)");
    return o;
}

Outcome chain_rings() {
    Outcome o;
    for (const char* r : {"Zmod:2^3", "Zmod:3^2"}) {
        const AbelianCategory c(std::get<Coefficients>(parse_ring_spec(r)));
        for (auto k : {DomainKind::Subprojective, DomainKind::Subinjective}) {
            const auto p = build_profile(c, k);
            o.require(p.classes.size() == 2, std::string(r) + " " + std::string(kind_name(k)) + " classes = " +
                                                 std::to_string(p.classes.size()));
        }
    }
    const AbelianCategory c(Coefficients::cyclic_ring(2, 3));
    const Bitset proj = projective_members(c);
    for (const char* m : {"Z/2", "Z/4"})
        o.require(subprojectivity_domain(c, c.parse(m)).bits == proj, std::string(m) + " is not sp-poor");
    return o;
}

Outcome integer_closed_form() {
    Outcome o;
    const AbelianCategory c(Coefficients::integers());
    const auto& u = c.universe();
    o.require(u.size() == 5, "universe size");
    std::vector<AbModule> sums;
    for (std::size_t mask = 1; mask < (1u << u.size()); ++mask) {
        AbModule s = c.zero();
        for (std::size_t i = 0; i < u.size(); ++i)
            if (mask >> i & 1) s = c.sum(s, u[i]);
        sums.push_back(s);
    }
    o.require(sums.size() == 31, "sum count");
    std::size_t agree = 0;
    for (const auto& m : sums)
        for (const auto& n : sums) {
            const bool got = is_subprojective(c, m, n);
            if (got == oracle::integer_sp_closed_form(m, n)) {
                ++agree;
            } else {
                o.require(false, m.to_string() + " | " + n.to_string());
            }
        }
    o.note = o.ok ? std::to_string(agree) + "/961 pairs" : o.note;
    return o;
}

Outcome suites() {
    Outcome o;
    std::size_t checks = 0;
    for (const auto& r : standard_instances()) {
        for (const auto& rep : verify_all(make_category(r), EngineOptions{4, nullptr})) {
            checks += rep.checks.size();
            for (const auto& ch : rep.checks)
                o.require(ch.pass, r + " " + rep.suite + " " + ch.proposition + ": " + ch.counterexample);
        }
    }
    if (o.ok) o.note = std::to_string(checks) + " checks on " + std::to_string(standard_instances().size()) + " instances";
    return o;
}

Outcome oracles() {
    Outcome o;
    std::size_t homs = 0;
    for (const auto& q : oracle::small_quivers()) {
        const auto mods = oracle::small_modules(q.vertex_count());
        for (const auto& m : mods)
            for (const auto& n : mods) {
                if (m.dim_vector().total() + n.dim_vector().total() > 6) continue;
                ++homs;
                o.require((std::size_t{1} << hom_dim(q, m, n)) == oracle::brute_hom_count(q, m, n),
                          "hom " + q.to_string() + " " + m.to_string() + " -> " + n.to_string());
            }
        for (const auto& iv : indecomposables(q)) {
            if (is_projective(q, QuiverModule(q.vertex_count(), {iv}))) continue;
            const auto t = tau(q, iv);
            o.require(t && oracle::dims_of(*t, q.vertex_count()) == oracle::dtr_oracle(q, iv),
                      "tau " + q.to_string() + " " + iv.dim_string(q.vertex_count()));
        }
    }
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int rep = 0; rep < 500; ++rep) {
        const auto a = oracle::random_matrix(rng, Coefficients::integers(), dim(rng), dim(rng), -6, 6);
        o.require(oracle::snf_matches(a, snf(a)), "snf over Z");
    }
    const std::pair<std::uint32_t, std::uint32_t> rings[] = {{2, 3}, {3, 2}, {2, 1}, {5, 2}, {2, 5}};
    for (int rep = 0; rep < 500; ++rep) {
        const auto [p, k] = rings[rep % 5];
        const auto f = Coefficients::cyclic_ring(p, k);
        const auto a = oracle::random_matrix(rng, f, dim(rng), dim(rng), 0, static_cast<long>(f.modulus()) - 1);
        o.require(oracle::snf_matches(a, snf(a)), "snf over " + f.to_string());
    }
    for (int rep = 0; rep < 500; ++rep) {
        const auto f = Coefficients::prime_field(rep % 2 ? 3 : 2);
        const auto a = oracle::random_matrix(rng, f, dim(rng), dim(rng), 0, f.prime() - 1);
        const auto ker = kernel(a);
        o.require((a * ker).is_zero() && ker.cols() + rank(a) == a.cols() && rank(ker) == ker.cols(),
                  "rank/kernel over F_p");
    }
    if (o.ok) o.note = std::to_string(homs) + " hom pairs, 1500 matrices";
    return o;
}

Outcome negative_controls() {
    Outcome o;
    const auto sub = find_submodule_violation(AbelianCategory(Coefficients::cyclic_ring(2, 2)));
    o.require(sub && sub->m == "Z/2" && sub->n == "Z/2^2" && sub->submodule == "Z/2", "Zmod:2^2 submodule violation");
    const AbelianCategory z(Coefficients::integers());
    const auto quo = find_quotient_violation(z);
    o.require(quo && quo->m == "Z/2" && quo->n == "Z" && quo->submodule == "Z/2", "Z quotient violation");
    o.require(is_subprojective(z, z.parse("Z/2"), z.parse("Z")) && !is_subprojective(z, z.parse("Z/2"), z.parse("Z/2")),
              "Z in domain(Z/2), Z/2 outside");
    return o;
}

Outcome determinism() {
    Outcome o;
    for (const char* ring : {"A4:><>;q=2", "Z", "Zmod:2^3"}) {
        std::string base;
        for (int rep = 0; rep < 3; ++rep)
            for (const char* w : {"1", "4", "8"}) {
                std::ostringstream out, err;
                const int code = run({"--ring", ring, "--workers", w, "profile"}, out, err);
                o.require(code == 0, std::string(ring) + ": " + err.str());
                if (base.empty()) base = out.str();
                o.require(out.str() == base, std::string(ring) + " differs at " + w + " workers");
            }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "A4 golden example", 5.0, a4_golden},
        {2, "chain rings have no middle class", 1.0, chain_rings},
        {3, "integer closed form on all 961 pairs", 5.0, integer_closed_form},
        {4, "suites S1-S16 on all instances", 60.0, suites},
        {5, "oracle equivalence", 0.0, oracles},
        {6, "negative controls", 0.0, negative_controls},
        {7, "profile bytes stable at 1/4/8 workers", 0.0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && c.budget > 0 && s >= c.budget) {
            o.ok = false;
            o.note = "over the time budget";
        }
        std::printf("%s criterion %d: %s (%.3f s%s%s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s,
                    o.note.empty() ? "" : "; ", o.note.c_str());
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}

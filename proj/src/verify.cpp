#include "profilium/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <type_traits>

namespace profilium {

std::size_t VerdictReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& r) { return !r.pass; }));
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"S1", "S2",  "S3",  "S4",  "S5",  "S6",  "S7",  "S8",
                                                 "S9", "S10", "S11", "S12", "S13", "S14", "S15", "S16"};
    return ids;
}

void require_suite(std::string_view id) {
    const auto& ids = suite_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw ContractError("unknown suite '" + std::string(id) + "' (expected S1..S16 or all)");
    }
}

const std::vector<std::string>& standard_instances() {
    static const std::vector<std::string> rings = {"Z",          "Zmod:2^3",    "Zmod:3^2",   "A2:>;q=2",
                                                   "A3:<>;q=2",  "A4:><>;q=2",  "A4:><>;q=3"};
    return rings;
}

// ---------------------------------------------------------------------------
// Subgroups of finite abelian groups, by brute force over the element set.

std::vector<AbModule> submodule_types(const AbModule& n) {
    if (n.free_rank() != 0) throw ContractError("submodule_types: module must be finite");
    std::vector<std::uint64_t> orders;
    std::uint64_t size = 1;
    for (const auto& p : n.parts()) {
        orders.push_back(p.order().get_ui());
        size *= orders.back();
        if (size > 64) throw ContractError("submodule_types: order above 64");
    }
    auto decode = [&](std::uint64_t x) {
        std::vector<std::uint64_t> v(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) {
            v[i] = x % orders[i];
            x /= orders[i];
        }
        return v;
    };
    auto encode = [&](const std::vector<std::uint64_t>& v) {
        std::uint64_t x = 0;
        for (std::size_t i = orders.size(); i-- > 0;) x = x * orders[i] + v[i] % orders[i];
        return x;
    };
    auto add = [&](std::uint64_t a, std::uint64_t b) {
        auto va = decode(a), vb = decode(b);
        for (std::size_t i = 0; i < va.size(); ++i) va[i] = (va[i] + vb[i]) % orders[i];
        return encode(va);
    };
    auto closure = [&](std::uint64_t mask) {
        mask |= 1;  // identity
        for (bool grew = true; grew;) {
            grew = false;
            for (std::uint64_t a = 0; a < size; ++a) {
                if (!((mask >> a) & 1)) continue;
                for (std::uint64_t b = 0; b < size; ++b) {
                    if (!((mask >> b) & 1)) continue;
                    const std::uint64_t s = add(a, b);
                    if (!((mask >> s) & 1)) {
                        mask |= std::uint64_t{1} << s;
                        grew = true;
                    }
                }
            }
        }
        return mask;
    };
    std::set<std::uint64_t> subgroups;
    std::vector<std::uint64_t> frontier;
    for (std::uint64_t g = 0; g < size; ++g) {
        const auto h = closure(std::uint64_t{1} << g);
        if (subgroups.insert(h).second) frontier.push_back(h);
    }
    const std::vector<std::uint64_t> cyclic(subgroups.begin(), subgroups.end());
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto h : frontier)
            for (auto c : cyclic) {
                const auto j = closure(h | c);
                if (subgroups.insert(j).second) next.push_back(j);
            }
        frontier = std::move(next);
    }

    std::set<std::uint32_t> primes;
    for (const auto& p : n.parts()) primes.insert(p.prime);
    std::vector<AbModule> out;
    for (auto h : subgroups) {
        std::vector<CyclicPart> parts;
        for (auto p : primes) {
            // |H[p^i]| for i = 0, 1, ...: the number of elements killed by p^i.
            auto killed = [&](std::uint64_t e) {
                std::uint64_t count = 0;
                for (std::uint64_t x = 0; x < size; ++x) {
                    if (!((h >> x) & 1)) continue;
                    auto v = decode(x);
                    bool zero = true;
                    for (std::size_t i = 0; i < v.size(); ++i) zero = zero && (v[i] * e) % orders[i] == 0;
                    count += zero;
                }
                return count;
            };
            std::vector<std::uint32_t> rank_at;  // number of cyclic factors of exponent >= i
            std::uint64_t prev = 1, pe = 1;
            for (;;) {
                pe *= p;
                const std::uint64_t cur = killed(pe);
                if (cur == prev) break;
                std::uint32_t r = 0;
                for (std::uint64_t q = cur / prev; q > 1; q /= p) ++r;
                rank_at.push_back(r);
                prev = cur;
            }
            for (std::size_t i = 0; i < rank_at.size(); ++i) {
                const std::uint32_t above = i + 1 < rank_at.size() ? rank_at[i + 1] : 0;
                for (std::uint32_t k = 0; k < rank_at[i] - above; ++k)
                    parts.push_back({p, static_cast<std::uint32_t>(i + 1)});
            }
        }
        AbModule m(n.ring(), 0, std::move(parts));
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    }
    std::stable_sort(out.begin(), out.end(), [](const AbModule& a, const AbModule& b) {
        BigInt oa = 1, ob = 1;
        for (const auto& p : a.parts()) oa *= p.order();
        for (const auto& p : b.parts()) ob *= p.order();
        return oa < ob;
    });
    return out;
}

std::vector<QuiverModule> subrepresentations(const LineQuiver& q, const Interval& n) {
    const std::size_t len = n.hi - n.lo + 1;
    std::vector<QuiverModule> out;
    for (std::uint32_t mask = 1; mask < (1u << len); ++mask) {
        auto in = [&](std::size_t v) { return v >= n.lo && v <= n.hi && ((mask >> (v - n.lo)) & 1); };
        bool closed = true;
        for (std::size_t a = 0; a < q.arrow_count() && closed; ++a) {
            const std::size_t s = q.arrow_source(a), t = q.arrow_target(a);
            if (in(s) && n.contains(t) && !in(t)) closed = false;
        }
        if (!closed) continue;
        std::vector<Interval> parts;
        for (std::size_t v = n.lo; v <= n.hi; ++v) {
            if (!in(v)) continue;
            std::size_t w = v;
            while (w + 1 <= n.hi && in(w + 1)) ++w;
            parts.push_back({static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(w)});
            v = w;
        }
        out.emplace_back(q.vertex_count(), std::move(parts));
    }
    return out;
}

namespace {

BigInt finite_order(const AbModule& m) {
    if (m.free_rank() != 0) return 0;
    BigInt o = 1;
    for (const auto& p : m.parts()) o *= p.order();
    return o;
}

std::vector<AbModule> cyclic_quotients(const AbelianCategory& c, const AbModule& n) {
    std::vector<AbModule> out;
    if (n.length() != 1) return out;
    for (const auto& u : c.universe()) {
        if (u.free_rank() != 0) continue;
        const auto& part = u.parts()[0];
        if (n.free_rank() == 1) {
            out.push_back(u);
        } else if (part.prime == n.parts()[0].prime && part.exponent < n.parts()[0].exponent) {
            out.push_back(u);
        }
    }
    return out;
}

}  // namespace

std::optional<SubmoduleViolation> find_submodule_violation(const AbelianCategory& c, const EngineOptions& opt) {
    for (const auto& m : c.universe()) {
        const DomainSet d = subprojectivity_domain(c, m, opt);
        for (std::size_t i = 0; i < c.universe().size(); ++i) {
            const auto& n = c.universe()[i];
            if (!d.bits.test(i) || n.free_rank() != 0 || finite_order(n) > 16) continue;
            for (const auto& s : submodule_types(n)) {
                if (!s.is_zero() && !decide(c, DomainKind::Subprojective, m, s, opt.cache)) {
                    return SubmoduleViolation{c.format(m), c.format(n), c.format(s)};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<SubmoduleViolation> find_quotient_violation(const AbelianCategory& c, const EngineOptions& opt) {
    for (const auto& m : c.universe()) {
        const DomainSet d = subprojectivity_domain(c, m, opt);
        for (std::size_t i = 0; i < c.universe().size(); ++i) {
            if (!d.bits.test(i)) continue;
            const auto& n = c.universe()[i];
            for (const auto& quotient : cyclic_quotients(c, n)) {
                if (!decide(c, DomainKind::Subprojective, m, quotient, opt.cache)) {
                    return SubmoduleViolation{c.format(m), c.format(n), c.format(quotient)};
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint32_t kSampleSeed = 20240611u;
constexpr std::size_t kExhaustiveLimit = 7;
constexpr std::size_t kRandomSupports = 24;

/// All nonzero supports for small universes; otherwise singletons, pairs, seeded random, full.
std::vector<Bitset> sample_supports(std::size_t n) {
    std::vector<Bitset> out;
    if (n == 0) return out;
    if (n <= kExhaustiveLimit) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Bitset b(n);
            for (std::size_t i = 0; i < n; ++i) b.set(i, (mask >> i) & 1);
            out.push_back(std::move(b));
        }
        std::stable_sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
        return out;
    }
    std::set<std::string> seen;
    auto add = [&](Bitset b) {
        if (b.none() || !seen.insert(b.to_string()).second) return;
        out.push_back(std::move(b));
    };
    for (std::size_t i = 0; i < n; ++i) add(Bitset::single(n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) add(Bitset::single(n, i) | Bitset::single(n, j));
    std::mt19937 rng(kSampleSeed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0, tries = 0; k < kRandomSupports && tries < 100 * kRandomSupports; ++tries) {
        Bitset b(n);
        for (std::size_t i = 0; i < n; ++i) b.set(i, coin(rng));
        const std::size_t before = out.size();
        add(std::move(b));
        if (out.size() > before) ++k;
    }
    add(Bitset::full(n));
    return out;
}

template <ModuleCategory C>
class Runner {
public:
    using M = typename C::Module;
    static constexpr bool kQuiver = std::is_same_v<C, QuiverCategory>;

    Runner(const C& c, const EngineOptions& opt, VerdictReport& report)
        : c_(c), opt_(opt), report_(report), samples_(sample_supports(c.universe().size())) {
        kinds_.push_back(DomainKind::Subprojective);
        if (c_.supports_envelopes()) kinds_.push_back(DomainKind::Subinjective);
        for (const auto& s : samples_) sample_modules_.push_back(support_sum(c_, s));
    }

    void run(std::string_view suite) {
        if (suite == "S1") s1();
        else if (suite == "S2") s2();
        else if (suite == "S3") s3();
        else if (suite == "S4") s4();
        else if (suite == "S5") s5();
        else if (suite == "S6") s6();
        else if (suite == "S7") s7();
        else if (suite == "S8") s8();
        else if (suite == "S9") s9();
        else if (suite == "S10") s10();
        else if (suite == "S11") s11();
        else if (suite == "S12") s12();
        else if (suite == "S13") s13();
        else if (suite == "S14") s14();
        else if (suite == "S15") s15();
        else if (suite == "S16") s16();
        else require_suite(suite);
    }

private:
    const C& c_;
    EngineOptions opt_;
    VerdictReport& report_;
    std::vector<Bitset> samples_;
    std::vector<M> sample_modules_;
    std::vector<DomainKind> kinds_;
    std::map<std::pair<int, std::string>, Bitset> memo_;

    bool chain_ring() const {
        if constexpr (kQuiver) return false;
        else return c_.ring().kind() == Coefficients::Kind::CyclicRing;
    }
    bool integers() const {
        if constexpr (kQuiver) return false;
        else return c_.ring().kind() == Coefficients::Kind::Integers;
    }

    std::string fmt(const M& m) const { return c_.format(m); }
    std::string fmt(const Bitset& b) const {
        std::string s = "{";
        bool first = true;
        for (auto i : b.members()) {
            if (!first) s += ", ";
            s += c_.format(c_.universe()[i]);
            first = false;
        }
        return s + "}";
    }
    static std::string tag(DomainKind k) { return std::string(kind_name(k)); }

    const Bitset& dom(DomainKind k, const M& m) {
        const auto key = std::make_pair(static_cast<int>(k), fmt(m));
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(key, domain(c_, k, m, opt_).bits).first->second;
    }
    bool in(DomainKind k, const M& m, const M& n) { return decide(c_, k, m, n, opt_.cache); }
    Bitset baseline(DomainKind k) const {
        return k == DomainKind::Subprojective ? projective_members(c_) : injective_members(c_);
    }

    void check(std::string prop, std::string instance, bool pass, std::string cex = {}, std::string detail = {}) {
        report_.checks.push_back({std::move(prop), std::move(instance), pass, true, pass ? std::string() : std::move(cex),
                                  std::move(detail)});
    }
    void expect_equal(std::string prop, std::string instance, const Bitset& got, const Bitset& want) {
        check(std::move(prop), std::move(instance), got == want, "expected " + fmt(want) + ", got " + fmt(got));
    }
    void skip(std::string prop, std::string why) {
        report_.checks.push_back({std::move(prop), c_.universe_id(), true, false, {}, std::move(why)});
    }

    M sum_all(const std::vector<M>& parts) const {
        M out = c_.zero();
        for (const auto& p : parts) out = c_.sum(out, p);
        return out;
    }
    M nonprojective_sum() const {
        M out = c_.zero();
        for (const auto& u : c_.universe())
            if (!c_.projective(u)) out = c_.sum(out, u);
        return out;
    }
    M injective_sum() const {
        M out = c_.zero();
        for (const auto& u : c_.universe())
            if (c_.injective(u)) out = c_.sum(out, u);
        return out;
    }
    /// Modules used as "m" in pairwise suites: every indecomposable plus the first sampled sums.
    std::vector<M> probe_modules(std::size_t extra) const {
        std::vector<M> out(c_.universe().begin(), c_.universe().end());
        for (std::size_t i = 0; i < sample_modules_.size() && extra > 0; ++i) {
            if (samples_[i].count() >= 2) {
                out.push_back(sample_modules_[i]);
                --extra;
            }
        }
        return out;
    }
    /// Sampled sums with at least two summands, at most `limit` of them.
    std::vector<M> sum_targets(std::size_t limit) const {
        std::vector<M> out;
        for (std::size_t i = 0; i < sample_modules_.size() && out.size() < limit; ++i)
            if (samples_[i].count() >= 2) out.push_back(sample_modules_[i]);
        return out;
    }

    // --- S1: domains of sums are intersections; verdicts do not depend on the presentation.
    void s1() {
        for (auto k : kinds_) {
            for (std::size_t s = 0; s < samples_.size(); ++s) {
                if (samples_[s].count() < 2) continue;
                Bitset meet = Bitset::full(c_.universe().size());
                for (auto i : samples_[s].members()) meet &= dom(k, c_.universe()[i]);
                expect_equal("intersection rule (" + tag(k) + ")", "m=" + fmt(sample_modules_[s]),
                             dom(k, sample_modules_[s]), meet);
            }
        }
        std::mt19937 rng(kSampleSeed + 1);
        const auto probes = probe_modules(6);
        const auto& u = c_.universe();
        if (probes.empty()) return;
        std::uniform_int_distribution<std::size_t> pick_m(0, probes.size() - 1), pick_n(0, sample_modules_.size() - 1);
        for (int t = 0; t < 20; ++t) {
            const M& m = probes[pick_m(rng)];
            const M& n = sample_modules_.empty() ? u[0] : sample_modules_[pick_n(rng)];
            const bool a = is_subprojective(c_, m, n), b = is_subprojective_padded(c_, m, n);
            check("presentation independence", "m=" + fmt(m) + " n=" + fmt(n), a == b,
                  "minimal cover says " + std::to_string(a) + ", padded cover says " + std::to_string(b));
        }
    }

    // --- S2: summands of members are members.
    void s2() {
        const auto ms = probe_modules(4);
        const auto ns = sum_targets(12);
        for (auto k : kinds_)
            for (const auto& m : ms)
                for (const auto& n : ns) {
                    if (!in(k, m, n)) continue;
                    for (const auto& part : c_.decompose(n)) {
                        check("summand closure (" + tag(k) + ")", "m=" + fmt(m) + " n=" + fmt(n) + " summand=" + fmt(part),
                              in(k, m, part), failure_witness(c_, k, m, part));
                    }
                }
    }

    // --- S3: finite sums of members are members; multiplicities do not matter.
    void s3() {
        const auto ms = probe_modules(4);
        const auto ns = sum_targets(12);
        for (auto k : kinds_)
            for (const auto& m : ms)
                for (const auto& n : ns) {
                    bool all = true;
                    for (const auto& part : c_.decompose(n)) all = all && in(k, m, part);
                    if (!all) continue;
                    check("finite-sum closure (" + tag(k) + ")", "m=" + fmt(m) + " n=" + fmt(n), in(k, m, n),
                          failure_witness(c_, k, m, n));
                }
        // multiplicity-2 spot check
        const auto& u = c_.universe();
        if (u.empty()) return;
        std::mt19937 rng(kSampleSeed + 2);
        std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
        for (int t = 0; t < 10; ++t) {
            const M a = u[pick(rng)], b = u[pick(rng)];
            const M doubled = c_.sum(c_.sum(a, a), b);
            const M reduced = a == b ? a : c_.sum(a, b);
            for (auto k : kinds_) {
                expect_equal("multiplicity-2 source (" + tag(k) + ")", "m=" + fmt(doubled), dom(k, doubled),
                             dom(k, reduced));
                const M& probe = u[pick(rng)];
                check("multiplicity-2 target (" + tag(k) + ")", "m=" + fmt(probe) + " n=" + fmt(doubled),
                      in(k, probe, doubled) == contains(c_, DomainSet{c_.universe_id(), dom(k, probe)}, doubled),
                      "direct verdict differs from the summand rule");
            }
        }
    }

    // --- S4: intersecting all domains leaves exactly the projectives (injectives for si).
    void s4() {
        for (auto k : kinds_) {
            Bitset meet = Bitset::full(c_.universe().size());
            for (const auto& m : c_.universe()) meet &= dom(k, m);
            for (const auto& m : sample_modules_) meet &= dom(k, m);
            expect_equal(k == DomainKind::Subprojective ? "projectives as intersection" : "injectives as intersection",
                         c_.universe_id() + " over " + std::to_string(samples_.size()) + " supports", meet, baseline(k));
        }
    }

    // --- S5: M is M-subprojective iff projective; dually for injective.
    void s5() {
        for (auto k : kinds_)
            for (const auto& m : sample_modules_) {
                const bool self = in(k, m, m);
                const bool want = k == DomainKind::Subprojective ? c_.projective(m) : c_.injective(m);
                check(k == DomainKind::Subprojective ? "self-subprojective iff projective" : "self-subinjective iff injective",
                      "m=" + fmt(m), self == want,
                      self ? "m=" + fmt(m) + " is self-" + tag(k) + " but not " +
                                 (k == DomainKind::Subprojective ? "projective" : "injective")
                           : failure_witness(c_, k, m, m));
            }
    }

    // --- S6: vanishing Hom forces membership.
    void s6() {
        for (auto k : kinds_)
            for (const auto& m : sample_modules_) {
                const Bitset vanishing = hom_vanishing(c_, k, m);
                const Bitset& d = dom(k, m);
                check("hom-vanishing membership (" + tag(k) + ")", "m=" + fmt(m), vanishing.subset_of(d),
                      "hom-vanishing " + fmt(vanishing) + " not inside domain " + fmt(d));
            }
    }

    // --- S7: basic portfolios.
    void s7() {
        check("basic zero module", "m=0", is_basic_sp(c_, c_.zero()));
        const M r = c_.regular();
        for (const auto& m : sample_modules_) {
            if (is_basic_sp(c_, m)) {
                expect_equal("basic sp-portfolio equality", "m=" + fmt(m), dom(DomainKind::Subprojective, m),
                             hom_vanishing(c_, DomainKind::Subprojective, m));
            }
            expect_equal("adding R keeps the sp-domain", "m=" + fmt(m), dom(DomainKind::Subprojective, c_.sum(m, r)),
                         dom(DomainKind::Subprojective, m));
            if constexpr (kQuiver) {
                const M kpart = nontrivial_part(c_, DomainKind::Subprojective, m);
                expect_equal("hereditary: sp-domain is hom-vanishing of the non-projective part", "m=" + fmt(m),
                             dom(DomainKind::Subprojective, m), hom_vanishing(c_, DomainKind::Subprojective, kpart));
            }
        }
        if (!c_.supports_envelopes()) return;
        const M e = injective_sum();
        for (const auto& m : sample_modules_) {
            if (m.is_zero() || c_.hom_trivial(e, m)) {
                expect_equal("basic si-portfolio equality", "m=" + fmt(m), dom(DomainKind::Subinjective, m),
                             hom_vanishing(c_, DomainKind::Subinjective, m));
            }
            expect_equal("adding an injective keeps the si-domain", "m=" + fmt(m),
                         dom(DomainKind::Subinjective, c_.sum(m, e)), dom(DomainKind::Subinjective, m));
        }
    }

    // --- S8: over a self-injective ring the only basic portfolio is everything.
    void s8() {
        if (!chain_ring()) {
            skip("QF: only basic portfolio is Mod-R", "requires a quasi-Frobenius ring (chain rings)");
            return;
        }
        const Bitset full = Bitset::full(c_.universe().size());
        for (const auto& m : sample_modules_) {
            check("QF: Hom(M,R) = 0 only for M = 0", "m=" + fmt(m), !is_basic_sp(c_, m),
                  "Hom(" + fmt(m) + ", R) = 0 for a nonzero module");
            for (auto k : kinds_) {
                const Bitset& d = dom(k, m);
                if (d == hom_vanishing(c_, k, m)) {
                    check("QF: basic " + tag(k) + "-portfolio is Mod-R", "m=" + fmt(m), d == full,
                          "basic domain " + fmt(d) + " is a proper class");
                } else {
                    check("QF: domain of nonzero module is not hom-characterized (" + tag(k) + ")", "m=" + fmt(m), true);
                }
            }
        }
    }

    // --- S9: hereditary submodule closure, instance checking.
    void s9() {
        if constexpr (kQuiver) {
            for (const auto& m : sample_modules_) {
                const Bitset& d = dom(DomainKind::Subprojective, m);
                for (auto i : d.members()) {
                    const Interval n = c_.universe()[i].parts()[0];
                    for (const auto& sub : subrepresentations(c_.quiver(), n)) {
                        bool ok = true;
                        std::string bad;
                        for (const auto& part : c_.decompose(sub)) {
                            if (!in(DomainKind::Subprojective, m, part)) {
                                ok = false;
                                bad = failure_witness(c_, DomainKind::Subprojective, m, part);
                                break;
                            }
                        }
                        check("submodule closure (hereditary)", "m=" + fmt(m) + " n=" + fmt(c_.universe()[i]) +
                                                                    " sub=" + fmt(sub),
                              ok, bad);
                    }
                }
            }
        } else if (integers()) {
            std::vector<M> targets;
            for (const auto& u : c_.universe()) targets.push_back(u);
            for (std::size_t s = 0; s < samples_.size(); ++s) {
                const M& n = sample_modules_[s];
                const BigInt o = finite_order(n);
                if (samples_[s].count() >= 2 && o != 0 && o <= 16) targets.push_back(n);
            }
            for (const auto& m : sample_modules_) {
                for (const auto& n : targets) {
                    if (!in(DomainKind::Subprojective, m, n)) continue;
                    if (n.free_rank() != 0) {
                        // Nonzero subgroups dZ of Z are all isomorphic to Z.
                        check("submodule closure (hereditary)", "m=" + fmt(m) + " n=Z sub=dZ",
                              in(DomainKind::Subprojective, m, M::free(1)));
                        continue;
                    }
                    for (const auto& sub : submodule_types(n)) {
                        if (sub.is_zero()) continue;
                        check("submodule closure (hereditary)", "m=" + fmt(m) + " n=" + fmt(n) + " sub=" + fmt(sub),
                              in(DomainKind::Subprojective, m, sub),
                              failure_witness(c_, DomainKind::Subprojective, m, sub));
                    }
                }
            }
            if constexpr (!kQuiver) {
                const auto q = find_quotient_violation(c_, opt_);
                check("quotient non-closure detected", c_.universe_id(), q.has_value(),
                      "no m, n in the universe with a quotient of n leaving the domain of m",
                      q ? "m=" + q->m + "; n=" + q->n + " in domain; quotient " + q->submodule + " not in domain" : "");
            }
        } else {
            if constexpr (!kQuiver) {
                const bool hereditary = c_.ring().exponent() == 1;
                const auto v = find_submodule_violation(c_, opt_);
                check("submodule closure fails off hereditary rings", c_.universe_id(), v.has_value() != hereditary,
                      hereditary ? "found a violation over a field" : "no violation found over a non-hereditary chain ring",
                      v ? "m=" + v->m + "; n=" + v->n + " in domain; submodule " + v->submodule + " not in domain" : "");
            }
        }
    }

    // --- S10: artinian chain rings have no middle class.
    void s10() {
        if (!chain_ring()) {
            skip("chain ring: no middle class", "requires a chain ring");
            return;
        }
        for (auto k : kinds_) {
            const Profile p = build_profile(c_, k, opt_);
            const std::size_t want = c_.universe().size() >= 2 ? 2 : 1;
            check("chain ring: no middle class (" + tag(k) + ")", c_.universe_id(), p.classes.size() == want,
                  "profile has " + std::to_string(p.classes.size()) + " classes");
        }
    }

    // --- S11: a simple in the domain either receives no map or its projective cover splits off.
    void s11() {
        if (integers()) {
            skip("simple lifting", "requires a semiperfect ring");
            return;
        }
        for (const auto& m : sample_modules_) {
            for (const auto& s : c_.simples()) {
                if (!in(DomainKind::Subprojective, m, s) || c_.hom_trivial(m, s)) continue;
                const M cover = [&] {
                    if constexpr (kQuiver) return projective_cover(c_.quiver(), s).cover;
                    else return projective_presentation(s).cover;
                }();
                const auto parts = c_.decompose(m);
                const bool splits = std::find(parts.begin(), parts.end(), cover) != parts.end();
                check("simple lifting", "m=" + fmt(m) + " S=" + fmt(s), splits,
                      "P(S)=" + fmt(cover) + " is not a summand of m=" + fmt(m) + " although S is in its domain");
            }
        }
    }

    // --- S12: strongly soc-projective iff projective.
    void s12() {
        std::vector<M> ms = sample_modules_;
        ms.push_back(c_.regular());
        for (const auto& m : ms) {
            const bool sso = is_strongly_soc_projective(c_, m, opt_);
            check("strongly soc-projective iff projective", "m=" + fmt(m), sso == c_.projective(m),
                  sso ? "m=" + fmt(m) + " is strongly soc-projective but not projective"
                      : "projective m=" + fmt(m) + " misses a simple");
        }
    }

    // --- S13: the tilting torsion pair of the injectives.
    void s13() {
        if constexpr (!kQuiver) {
            skip("tilting torsion pair", "requires a quiver");
        } else {
            const auto& q = c_.quiver();
            const M e = injective_sum();
            const M te = tau(q, e);
            check("E is tilting", "E=" + fmt(e), is_tilting(q, e), "ext1(E,E) or summand count fails");
            const Bitset gen = universe_where(c_, [&](const M& n) { return is_generated_by(q, e, n); });
            const Bitset cogen = universe_where(c_, [&](const M& n) { return is_cogenerated_by(q, te, n); });
            const Bitset perp = universe_where(c_, [&](const M& n) { return c_.hom_trivial(e, n); });
            expect_equal("Gen E = injectives", "E=" + fmt(e), gen, injective_members(c_));
            expect_equal("Cogen tauE = {N : Hom(E,N) = 0}", "tauE=" + fmt(te), cogen, perp);
            check("torsion classes partition the indecomposables", fmt(e),
                  (gen & cogen).none() && (gen | cogen).all(), "Gen " + fmt(gen) + " / Cogen " + fmt(cogen));
            bool orth = true;
            std::string bad;
            for (auto t : gen.members())
                for (auto f : cogen.members())
                    if (orth && !c_.hom_trivial(c_.universe()[t], c_.universe()[f])) {
                        orth = false;
                        bad = "Hom(" + fmt(c_.universe()[t]) + ", " + fmt(c_.universe()[f]) + ") != 0";
                    }
            check("Hom(torsion, torsion-free) = 0", fmt(e), orth, bad);
            expect_equal("tauE si-poor", "tauE=" + fmt(te), dom(DomainKind::Subinjective, te), injective_members(c_));
        }
    }

    // --- S14: every si-portfolio is basic over a hereditary noetherian ring.
    void s14() {
        if constexpr (!kQuiver) {
            skip("si-portfolios are basic", "requires a hereditary noetherian family with envelopes (quivers)");
        } else {
            for (const auto& m : sample_modules_) {
                const M kpart = nontrivial_part(c_, DomainKind::Subinjective, m);
                expect_equal("si-domain ignores injective summands", "m=" + fmt(m) + " K=" + fmt(kpart),
                             dom(DomainKind::Subinjective, m), dom(DomainKind::Subinjective, kpart));
                expect_equal("si-domain is hom-characterized", "K=" + fmt(kpart), dom(DomainKind::Subinjective, kpart),
                             hom_vanishing(c_, DomainKind::Subinjective, kpart));
            }
        }
    }

    // --- S15: sp-poor modules and torsion-pair generators.
    void s15() {
        const M w = nonprojective_sum();
        const Bitset proj = projective_members(c_);
        const Profile p = build_profile(c_, DomainKind::Subprojective, opt_);
        if constexpr (kQuiver) {
            std::vector<M> poor{w};
            for (const auto& lit : poor_modules(p)) poor.push_back(c_.parse(lit));
            for (const auto& m : poor) {
                expect_equal("witness is sp-poor", "m=" + fmt(m), dom(DomainKind::Subprojective, m), proj);
                const M kpart = nontrivial_part(c_, DomainKind::Subprojective, m);
                check("generator has no maps to R", "K=" + fmt(kpart), c_.hom_trivial(kpart, c_.regular()),
                      "Hom(" + fmt(kpart) + ", R) != 0");
                expect_equal("{N : Hom(K,N) = 0} = projectives", "K=" + fmt(kpart),
                             hom_vanishing(c_, DomainKind::Subprojective, kpart), proj);
            }
        } else if (integers()) {
            const bool poor = dom(DomainKind::Subprojective, w) == proj;
            check("sp-poor relative to the universe", "m=" + fmt(w), poor, "domain " + fmt(dom(DomainKind::Subprojective, w)),
                  c_.hom_trivial(w, c_.regular())
                      ? "Hom(m, Z) = 0, so m is sp-poor only relative to the universe; absolutely sp-poor groups need Hom(M, Z) != 0"
                      : "");
        } else {
            for (const auto& lit : poor_modules(p)) {
                const M m = c_.parse(lit);
                check("non-hereditary: sp-poor modules map nontrivially to R", "m=" + lit,
                      !c_.hom_trivial(m, c_.regular()), "Hom(" + lit + ", R) = 0");
            }
        }
    }

    // --- S16: worked examples and profile invariants.
    void s16() {
        const Bitset full = Bitset::full(c_.universe().size());
        for (auto k : kinds_) expect_equal("domain of 0 is everything (" + tag(k) + ")", "m=0", dom(k, c_.zero()), full);
        expect_equal("sum of non-projective indecomposables is sp-poor", "m=" + fmt(nonprojective_sum()),
                     dom(DomainKind::Subprojective, nonprojective_sum()), projective_members(c_));
        for (const auto& u : c_.universe())
            check("literal round trip", fmt(u), c_.parse(fmt(u)) == u, "re-parsed form differs");

        for (auto k : kinds_) profile_invariants(build_profile(c_, k, opt_));

        if constexpr (kQuiver) quiver_examples();
        else if (integers()) integer_examples();
        else chain_ring_examples();
    }

    void profile_invariants(const Profile& p) {
        const std::string k = tag(p.kind);
        check("profile meet-closed (" + k + ")", p.universe_id, is_meet_closed(p), "a pairwise meet is missing");
        check("profile top present (" + k + ")", p.universe_id,
              p.classes[p.top].members == Bitset::full(p.universe.size()), "top is not the whole universe");
        for (auto a : p.coatoms) {
            bool ok = a != p.top && p.classes[a].members.subset_of(p.classes[p.top].members);
            for (std::size_t b = 0; b < p.classes.size() && ok; ++b) {
                if (b == a || b == p.top) continue;
                if (p.classes[a].members.subset_of(p.classes[b].members)) ok = false;
            }
            check("coatom below top with nothing between (" + k + ")", p.classes[a].witness, ok,
                  "class " + fmt(p.classes[a].members) + " is not a coatom");
        }
        for (const auto& cl : p.classes) {
            const M w = c_.parse(cl.witness);
            check("witness round trip (" + k + ")", cl.witness, fmt(w) == cl.witness, "re-parsed as " + fmt(w));
            expect_equal("witness attains its class (" + k + ")", cl.witness, domain(c_, p.kind, w, opt_).bits, cl.members);
        }
        for (const auto& mm : maximal_members(p)) {
            if (mm.summand_characterized) {
                check("summand-characterized module is maximal (" + k + ")", mm.module, mm.coatom,
                      "class of " + mm.module + " is not a coatom");
            }
        }
    }

    void integer_examples() {
        // closed form: n in domain(m) iff n has no p-torsion for p dividing the torsion of m
        std::vector<M> sums = sample_modules_;
        sums.insert(sums.begin(), c_.zero());
        std::size_t agree = 0, total = 0;
        std::string first_bad;
        for (const auto& m : sums)
            for (const auto& n : sums) {
                if (n.is_zero()) continue;
                bool oracle = true;
                for (const auto& a : m.parts())
                    for (const auto& b : n.parts())
                        if (a.prime == b.prime) oracle = false;
                ++total;
                if (in(DomainKind::Subprojective, m, n) == oracle) ++agree;
                else if (first_bad.empty()) first_bad = "m=" + fmt(m) + "; n=" + fmt(n);
            }
        check("closed form over Z", c_.universe_id() + " (" + std::to_string(total) + " pairs)", agree == total, first_bad);

        const auto& primes = c_.params().primes;
        const bool standard = std::find(primes.begin(), primes.end(), 2u) != primes.end() &&
                              std::find(primes.begin(), primes.end(), 3u) != primes.end() &&
                              c_.params().max_exponent >= 2;
        if (!standard) return;
        auto p = [&](const char* s) { return c_.parse(s); };
        check("Z/4 is Z/9-subprojective", "m=Z/4 n=Z/9", in(DomainKind::Subprojective, p("Z/4"), p("Z/9")));
        check("Z/2 is not Z/2-subprojective", "m=Z/2 n=Z/2", !in(DomainKind::Subprojective, p("Z/2"), p("Z/2")));
        check("Z + Z/4 is not strongly soc-projective", "m=Z + Z/4", !is_strongly_soc_projective(c_, p("Z + Z/4"), opt_));
        check("Z^2 is strongly soc-projective", "m=Z^2", is_strongly_soc_projective(c_, p("Z^2"), opt_));
        const Bitset want = universe_where(c_, [&](const M& n) {
            return std::none_of(n.parts().begin(), n.parts().end(), [](const CyclicPart& c) { return c.prime == 2; });
        });
        expect_equal("domain of Z/4", "m=Z/4", dom(DomainKind::Subprojective, p("Z/4")), want);
    }

    void chain_ring_examples() {
        if constexpr (!kQuiver) {
            const auto& ring = c_.ring();
            const std::uint32_t pr = ring.prime(), k = ring.exponent();
            const M simple = M::cyclic(ring, pr, 1);
            check("cover of the simple is R", "n=" + fmt(simple), projective_presentation(simple).cover == c_.regular(),
                  "cover is " + fmt(projective_presentation(simple).cover));
            const Bitset proj = projective_members(c_);
            for (std::uint32_t i = 1; i < k; ++i) {
                const M m = M::cyclic(ring, pr, i);
                check("Z/p^i not projective for i < k", "m=" + fmt(m), !c_.projective(m));
                expect_equal("Z/p^i is sp-poor for i < k", "m=" + fmt(m), dom(DomainKind::Subprojective, m), proj);
                check("Z/p^i not basic", "m=" + fmt(m), !is_basic_sp(c_, m));
                for (std::uint32_t j = 1; j < k; ++j) {
                    const M n = M::cyclic(ring, pr, j);
                    check("Z/p^i is not Z/p^j-subprojective", "m=" + fmt(m) + " n=" + fmt(n),
                          !in(DomainKind::Subprojective, m, n));
                }
            }
            const Profile sp = build_profile(c_, DomainKind::Subprojective, opt_);
            const auto poor = poor_modules(sp);
            for (std::uint32_t i = 1; i < k; ++i) {
                const std::string lit = fmt(M::cyclic(ring, pr, i));
                check("listed as sp-poor", lit, std::find(poor.begin(), poor.end(), lit) != poor.end(),
                      lit + " missing from the sp-poor list");
            }
            if (k >= 2) {
                check("sp-profile classes are top and {R}", c_.universe_id(),
                      sp.classes.size() == 2 && sp.classes[1].members == proj, "unexpected sp-profile");
                const M m = M::cyclic(ring, pr, k - 1);
                check("Z/p^(k-1) is not Z/p-subinjective", "m=" + fmt(m) + " n=" + fmt(simple),
                      !in(DomainKind::Subinjective, m, simple));
            }
        }
    }

    void quiver_examples() {
        if constexpr (kQuiver) {
            const auto& q = c_.quiver();
            const std::size_t n = q.vertex_count();
            const M e = injective_sum();
            check("ext1(E,E) = 0", "E=" + fmt(e), ext1_dim(q, e, e) == 0);
            check("E tilting", "E=" + fmt(e), is_tilting(q, e));
            if (q.to_string().rfind("A4:><>;", 0) == 0) {
                std::set<std::string> dims, want = {"1000", "0100", "0010", "0001", "1100",
                                                    "0110", "0011", "1110", "0111", "1111"};
                for (const auto& u : c_.universe()) dims.insert(fmt(u));
                check("A4 indecomposables", q.to_string(), dims == want, "dimension vectors differ");
                const std::vector<std::string> pw = {"1100", "0100", "0111", "0001"}, iw = {"1000", "1110", "0010", "0011"};
                for (std::size_t v = 0; v < n; ++v) {
                    check("A4 P(" + std::to_string(v + 1) + ")", pw[v], projective(q, v).dim_string(n) == pw[v],
                          "got " + projective(q, v).dim_string(n));
                    check("A4 I(" + std::to_string(v + 1) + ")", iw[v], injective(q, v).dim_string(n) == iw[v],
                          "got " + injective(q, v).dim_string(n));
                }
                const M te = tau(q, e);
                check("A4 tauE", "tauE", fmt(te) == "0110+0111+1100+1111", "got " + fmt(te));
                check("A4 tau(0011) = 1100", "0011", fmt(tau(q, c_.parse("0011"))) == "1100",
                      "got " + fmt(tau(q, c_.parse("0011"))));
                check("A4 tauE not 1111-subinjective", "m=tauE n=1111",
                      !in(DomainKind::Subinjective, te, c_.parse("1111")));
                expect_equal("A4 Gen E", "E", universe_where(c_, [&](const M& x) { return is_generated_by(q, e, x); }),
                             injective_members(c_));
                expect_equal("A4 tauE si-poor", "tauE", dom(DomainKind::Subinjective, te), injective_members(c_));
            }
            if (q.to_string().rfind("A2:>;", 0) == 0) {
                const M s1 = c_.parse("10");
                const Profile sp = build_profile(c_, DomainKind::Subprojective, opt_);
                check("A2 sp-profile has 2 classes", q.to_string(), sp.classes.size() == 2,
                      std::to_string(sp.classes.size()) + " classes");
                check("A2 bottom witness is S(1)", q.to_string(), sp.classes.back().witness == "10",
                      "witness " + sp.classes.back().witness);
                check("A2 S(1) basic", "m=10", is_basic_sp(c_, s1));
                Bitset not_s1 = Bitset::full(c_.universe().size());
                for (std::size_t i = 0; i < c_.universe().size(); ++i)
                    if (c_.universe()[i] == s1) not_s1.set(i, false);
                expect_equal("A2 domain of S(1) avoids S(1)", "m=10", dom(DomainKind::Subprojective, s1), not_s1);
                bool flagged = false;
                for (const auto& mm : maximal_members(sp))
                    if (mm.module == "10" && mm.summand_characterized && mm.coatom) flagged = true;
                check("A2 S(1) maximally subprojective", "m=10", flagged, "S(1) not flagged");
            }
        }
    }
};

template <ModuleCategory C>
VerdictReport run_suite(std::string_view suite, const C& c, const EngineOptions& opt) {
    require_suite(suite);
    VerdictReport report{std::string(suite), c.ring_spec(), c.universe_id(), {}, 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    Runner<C> runner(c, opt, report);
    try {
        runner.run(suite);
    } catch (const std::exception& e) {
        report.checks.push_back({"suite completed", c.universe_id(), false, true, std::string("exception: ") + e.what(), {}});
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace

VerdictReport verify(std::string_view suite, const AnyCategory& c, const EngineOptions& opt) {
    VerdictCache local;
    EngineOptions o = opt;
    if (!o.cache) o.cache = &local;
    return std::visit([&](const auto& cat) { return run_suite(suite, cat, o); }, c);
}

std::vector<VerdictReport> verify_all(const AnyCategory& c, const EngineOptions& opt) {
    VerdictCache local;
    EngineOptions inner = opt;
    if (!inner.cache) inner.cache = &local;
    inner.workers = 1;
    const auto& ids = suite_ids();
    return parallel_map<VerdictReport>(ids.size(), opt.workers, [&](std::size_t i) {
        return std::visit([&](const auto& cat) { return run_suite(ids[i], cat, inner); }, c);
    });
}

}  // namespace profilium

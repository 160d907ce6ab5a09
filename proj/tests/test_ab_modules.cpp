#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "profilium/ab_modules.hpp"
#include "profilium/engine.hpp"
#include "profilium/errors.hpp"

using namespace profilium;

namespace {

using Element = std::vector<long>;

// A finite module as a list of cyclic orders; elements are residue vectors.
struct Finite {
    std::vector<long> orders;

    std::vector<Element> elements() const {
        std::vector<Element> out{{}};
        for (long o : orders) {
            std::vector<Element> next;
            for (const auto& e : out)
                for (long x = 0; x < o; ++x) {
                    auto w = e;
                    w.push_back(x);
                    next.push_back(w);
                }
            out = std::move(next);
        }
        return out;
    }
    Element scale(const Element& x, long r) const {
        Element y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = ((x[i] * r) % orders[i] + orders[i]) % orders[i];
        return y;
    }
    bool is_zero(const Element& x) const {
        for (long v : x)
            if (v != 0) return false;
        return true;
    }
    // Elements killed by r.
    std::vector<Element> killed_by(long r) const {
        std::vector<Element> out;
        for (const auto& x : elements())
            if (is_zero(scale(x, r))) out.push_back(x);
        return out;
    }
};

Finite torsion_of(const AbModule& m) {
    Finite f;
    for (const auto& c : m.parts()) f.orders.push_back(c.order().get_si());
    return f;
}

// All homomorphisms source -> target of finite modules as lists of generator images.
std::vector<std::vector<Element>> all_homs(const Finite& s, const Finite& t) {
    std::vector<std::vector<Element>> out{{}};
    for (long o : s.orders) {
        const auto choices = t.killed_by(o);
        std::vector<std::vector<Element>> next;
        for (const auto& h : out)
            for (const auto& c : choices) {
                auto w = h;
                w.push_back(c);
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

// Image of x under a map given by generator images.
Element apply(const Finite& target, const std::vector<Element>& map, const Element& x) {
    Element y(target.orders.size(), 0);
    for (std::size_t j = 0; j < map.size(); ++j)
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + map[j][i] * x[j]) % target.orders[i];
    return y;
}

std::vector<AbModule> chain_modules(const Coefficients& r, std::size_t max_parts) {
    std::vector<AbModule> out;
    std::vector<AbModule> level{AbModule::zero(r)};
    for (std::size_t n = 0; n < max_parts; ++n) {
        std::vector<AbModule> next;
        for (const auto& m : level)
            for (std::uint32_t e = 1; e <= r.exponent(); ++e) next.push_back(direct_sum(m, AbModule::cyclic(r, r.prime(), e)));
        for (const auto& m : next)
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        level = next;
    }
    return out;
}

// Lifting from the definition, one cyclic summand of m at a time (Hom turns sums into products):
// a map Z/o -> n is an element x with o x = 0, and it lifts iff some y in the free cover on the
// generators of n has o y = 0 and maps to x.
bool sp_by_definition(const AbModule& m, const AbModule& n) {
    const long q = static_cast<long>(m.ring().modulus());
    const Finite fm = torsion_of(m), fn = torsion_of(n);
    Finite free;
    free.orders.assign(fn.orders.size(), q);
    std::vector<Element> pi;
    for (std::size_t i = 0; i < fn.orders.size(); ++i) {
        Element e(fn.orders.size(), 0);
        e[i] = 1;
        pi.push_back(e);
    }
    for (long o : fm.orders) {
        std::set<Element> reached;
        for (const auto& y : free.killed_by(o)) reached.insert(apply(fn, pi, y));
        for (const auto& x : fn.killed_by(o))
            if (!reached.count(x)) return false;
    }
    return true;
}

// Extension straight from the definition over the envelope (Z/p^k)^r, Z/p^e sitting at p^{k-e}.
bool si_by_definition(const AbModule& m, const AbModule& n) {
    const auto& ring = m.ring();
    const long q = static_cast<long>(ring.modulus());
    const Finite fm = torsion_of(m), fn = torsion_of(n);
    Finite env;
    env.orders.assign(fn.orders.size(), q);
    std::vector<Element> iota;
    for (std::size_t i = 0; i < fn.orders.size(); ++i) {
        Element e(fn.orders.size(), 0);
        e[i] = q / fn.orders[i];
        iota.push_back(e);
    }
    std::set<std::vector<Element>> restrictions;
    for (const auto& g : all_homs(env, fm)) {
        std::vector<Element> r;
        for (const auto& e : iota) r.push_back(apply(fm, g, e));
        restrictions.insert(r);
    }
    for (const auto& f : all_homs(fn, fm))
        if (!restrictions.count(f)) return false;
    return true;
}

}  // namespace

TEST(AbModule, CanonicalFormAndPrinting) {
    const auto z = Coefficients::integers();
    EXPECT_EQ(parse_ab_module("Z/2 + Z + Z/4", z).to_string(), "Z + Z/4 + Z/2");
    EXPECT_EQ(parse_ab_module("Z/6", z).to_string(), "Z/3 + Z/2");
    EXPECT_EQ(parse_ab_module("Z^2 + Z/2^3", z).to_string(), "Z^2 + Z/8");
    EXPECT_EQ(parse_ab_module("0", z).to_string(), "0");
    EXPECT_EQ(parse_ab_module("Z/9 + 0", z), parse_ab_module("Z/3^2", z));
    const auto c = Coefficients::cyclic_ring(2, 3);
    EXPECT_EQ(parse_ab_module("Z/4 + Z/2", c).to_string(), "Z/2^2 + Z/2");
    EXPECT_EQ(parse_ab_module("Z/2^3", c), parse_ab_module("Z/8", c));
}

TEST(AbModule, RoundTrip) {
    for (const auto& r : {Coefficients::cyclic_ring(2, 3), Coefficients::cyclic_ring(3, 2)}) {
        for (const auto& m : chain_modules(r, 3)) EXPECT_EQ(parse_ab_module(m.to_string(), r), m);
    }
    const auto z = Coefficients::integers();
    for (const char* s : {"Z", "Z^3 + Z/2", "Z/4 + Z/9 + Z/3", "Z/2 + Z/2 + Z/2"}) {
        const auto m = parse_ab_module(s, z);
        EXPECT_EQ(parse_ab_module(m.to_string(), z), m);
    }
}

TEST(AbModule, ParseErrors) {
    const auto z = Coefficients::integers();
    const auto c = Coefficients::cyclic_ring(2, 2);
    EXPECT_THROW(parse_ab_module("", z), ParseError);
    EXPECT_THROW(parse_ab_module("Z/", z), ParseError);
    EXPECT_THROW(parse_ab_module("Z/0", z), ParseError);
    EXPECT_THROW(parse_ab_module("Z/4 +", z), ParseError);
    EXPECT_THROW(parse_ab_module("Q", z), ParseError);
    EXPECT_THROW(parse_ab_module("Z/6^2", z), ParseError);
    EXPECT_THROW(parse_ab_module("Z/8", c), ParseError);
    EXPECT_THROW(parse_ab_module("Z/3", c), ParseError);
    EXPECT_THROW(parse_ab_module("Z", c), ParseError);
    EXPECT_THROW(parse_ab_module("Z/2", Coefficients::prime_field(2)), ContractError);
    try {
        parse_ab_module("Z/4 * Z/2", z);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(AbModule, SummandsEnumeration) {
    const auto c = Coefficients::cyclic_ring(2, 2);
    const auto m = parse_ab_module("Z/4 + Z/2 + Z/2", c);
    EXPECT_EQ(summands(m).size(), 6u);
    EXPECT_EQ(indecomposable_summands(m).size(), 3u);
}

TEST(Hom, CardinalityMatchesEnumeration) {
    for (const auto& r : {Coefficients::cyclic_ring(2, 3), Coefficients::cyclic_ring(3, 2)}) {
        const auto mods = chain_modules(r, 2);
        for (const auto& m : mods)
            for (const auto& n : mods) {
                const auto h = hom(m, n);
                EXPECT_EQ(h.cardinality(), BigInt(all_homs(torsion_of(m), torsion_of(n)).size()))
                    << m.to_string() << " -> " << n.to_string();
                for (const auto& g : h.generators) EXPECT_TRUE(is_homomorphism(m, n, g));
            }
    }
    const auto z = Coefficients::integers();
    const std::vector<AbModule> tors{parse_ab_module("Z/4", z), parse_ab_module("Z/2 + Z/3", z),
                                     parse_ab_module("Z/9 + Z/3", z), parse_ab_module("Z/4 + Z/2", z)};
    for (const auto& m : tors)
        for (const auto& n : tors)
            EXPECT_EQ(hom(m, n).cardinality(), BigInt(all_homs(torsion_of(m), torsion_of(n)).size()));
    EXPECT_FALSE(hom(parse_ab_module("Z", z), parse_ab_module("Z", z)).is_finite());
    EXPECT_TRUE(hom(parse_ab_module("Z/4", z), parse_ab_module("Z", z)).is_trivial());
    EXPECT_THROW((void)hom(parse_ab_module("Z", z), parse_ab_module("Z", z)).cardinality(), ContractError);
}

TEST(Hom, CoordinatesRoundTrip) {
    const auto c = Coefficients::cyclic_ring(2, 3);
    const auto m = parse_ab_module("Z/8 + Z/2", c), n = parse_ab_module("Z/4 + Z/2", c);
    const auto h = hom(m, n);
    for (std::size_t i = 0; i < h.generators.size(); ++i) {
        auto coords = h.coordinates(h.generators[i]);
        for (std::size_t j = 0; j < coords.size(); ++j) EXPECT_EQ(coords[j], j == i ? 1 : 0);
    }
}

TEST(Subprojectivity, ChainRingMatchesDefinition) {
    for (const auto& r : {Coefficients::cyclic_ring(2, 3), Coefficients::cyclic_ring(3, 2)}) {
        AbelianCategory cat(r);
        const auto mods = chain_modules(r, 2);
        for (const auto& m : mods)
            for (const auto& n : mods) {
                if (m.is_zero() || n.is_zero()) continue;
                EXPECT_EQ(is_subprojective(cat, m, n), sp_by_definition(m, n))
                    << m.to_string() << " | " << n.to_string();
                EXPECT_EQ(is_subprojective_padded(cat, m, n), is_subprojective(cat, m, n));
            }
    }
}

TEST(Subprojectivity, IntegersFiniteTorsionOracle) {
    // Maps out of a finite group into a free group vanish, so m is n-sp iff Hom(tors m, n) = 0.
    const auto z = Coefficients::integers();
    AbelianCategory cat(z);
    const std::vector<const char*> lits{"Z", "Z/2", "Z/3", "Z/4", "Z/9", "Z + Z/2", "Z/2 + Z/3", "Z^2 + Z/4", "Z/4 + Z/9"};
    for (const char* a : lits)
        for (const char* b : lits) {
            const auto m = parse_ab_module(a, z), n = parse_ab_module(b, z);
            const bool want = all_homs(torsion_of(m), torsion_of(n)).size() == 1;
            EXPECT_EQ(is_subprojective(cat, m, n), want) << a << " | " << b;
            EXPECT_EQ(is_subprojective_padded(cat, m, n), want);
        }
}

TEST(Subinjectivity, ChainRingMatchesDefinition) {
    for (const auto& r : {Coefficients::cyclic_ring(2, 3), Coefficients::cyclic_ring(3, 2)}) {
        AbelianCategory cat(r);
        const auto mods = chain_modules(r, 2);
        for (const auto& m : mods)
            for (const auto& n : mods) {
                if (m.is_zero() || n.is_zero()) continue;
                EXPECT_EQ(is_subinjective(cat, m, n), si_by_definition(m, n))
                    << m.to_string() << " | " << n.to_string();
            }
    }
    AbelianCategory c8(Coefficients::cyclic_ring(2, 3));
    EXPECT_FALSE(is_subinjective(c8, c8.parse("Z/4"), c8.parse("Z/2")));
}

TEST(Subinjectivity, IntegersUnsupported) {
    AbelianCategory cat(Coefficients::integers());
    EXPECT_THROW(is_subinjective(cat, cat.parse("Z/2"), cat.parse("Z/2")), UnsupportedEnvelope);
    EXPECT_THROW(injective_envelope(cat.parse("Z/2")), UnsupportedEnvelope);
}

TEST(Envelope, InjectiveAndEssential) {
    for (const auto& r : {Coefficients::cyclic_ring(2, 3), Coefficients::cyclic_ring(3, 2)}) {
        for (const auto& n : chain_modules(r, 2)) {
            if (n.is_zero()) continue;
            const auto e = injective_envelope(n);
            EXPECT_TRUE(is_injective(e.envelope));
            EXPECT_TRUE(is_homomorphism(n, e.envelope, e.matrix));
            const Finite fn = torsion_of(n), fe = torsion_of(e.envelope);
            std::vector<Element> cols;
            for (std::size_t j = 0; j < e.matrix.cols(); ++j) {
                Element c;
                for (std::size_t i = 0; i < e.matrix.rows(); ++i) c.push_back(e.matrix(i, j).get_si());
                cols.push_back(c);
            }
            std::set<Element> img;
            for (const auto& x : fn.elements()) {
                const auto y = apply(fe, cols, x);
                EXPECT_TRUE(!fe.is_zero(y) || fn.is_zero(x)) << "not injective on " << n.to_string();
                img.insert(y);
            }
            // every nonzero element has a nonzero multiple inside the image
            for (const auto& y : fe.elements()) {
                if (fe.is_zero(y)) continue;
                bool hit = false;
                for (long s = 1; s < static_cast<long>(r.modulus()) && !hit; ++s) {
                    const auto w = fe.scale(y, s);
                    hit = !fe.is_zero(w) && img.count(w);
                }
                EXPECT_TRUE(hit) << "not essential on " << n.to_string();
            }
            // and the envelope is no larger than needed
            EXPECT_EQ(e.envelope.length(), n.length());
        }
    }
}

TEST(Presentation, EpimorphismFromProjective) {
    const auto z = Coefficients::integers();
    for (const char* s : {"Z + Z/4", "Z/2 + Z/3", "Z/9"}) {
        const auto n = parse_ab_module(s, z);
        const auto p = projective_presentation(n);
        EXPECT_TRUE(is_projective(p.cover));
        EXPECT_TRUE(is_homomorphism(p.cover, n, p.matrix));
        EXPECT_TRUE(is_epimorphism(n, p.matrix));
    }
}

TEST(Projectivity, Families) {
    const auto z = Coefficients::integers();
    EXPECT_TRUE(is_projective(parse_ab_module("Z^2", z)));
    EXPECT_FALSE(is_projective(parse_ab_module("Z + Z/2", z)));
    EXPECT_FALSE(is_injective(parse_ab_module("Z", z)));
    const auto c = Coefficients::cyclic_ring(3, 2);
    EXPECT_TRUE(is_projective(parse_ab_module("Z/9 + Z/9", c)));
    EXPECT_TRUE(is_injective(parse_ab_module("Z/9", c)));
    EXPECT_FALSE(is_injective(parse_ab_module("Z/3", c)));
}

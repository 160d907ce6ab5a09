#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "profilium/engine.hpp"
#include "profilium/errors.hpp"

using namespace profilium;

namespace {

std::vector<std::string> literals(const AbelianCategory& c, const Bitset& b) {
    std::vector<std::string> out;
    for (auto i : b.members()) out.push_back(c.format(c.universe()[i]));
    return out;
}

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "profilium-engine-test";
    std::filesystem::create_directories(dir);
    const auto p = dir / name;
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST(Bitset, Basics) {
    Bitset b(70);
    b.set(0);
    b.set(69);
    EXPECT_EQ(b.count(), 2u);
    EXPECT_TRUE(b.test(69));
    EXPECT_EQ(b.members(), (std::vector<std::size_t>{0, 69}));
    EXPECT_TRUE(b.subset_of(Bitset::full(70)));
    EXPECT_FALSE(Bitset::full(70).subset_of(b));
    EXPECT_EQ((b & Bitset::single(70, 0)), Bitset::single(70, 0));
    EXPECT_EQ((Bitset::single(3, 1) | Bitset::single(3, 2)).to_string(), "011");
    EXPECT_TRUE(Bitset(0).all());
    EXPECT_TRUE(Bitset(5).none());
}

TEST(RingSpec, Parsing) {
    EXPECT_TRUE(std::holds_alternative<Coefficients>(parse_ring_spec("Z")));
    const auto c = std::get<Coefficients>(parse_ring_spec("Zmod:2^3"));
    EXPECT_EQ(c.modulus(), 8u);
    EXPECT_TRUE(std::holds_alternative<LineQuiver>(parse_ring_spec("A3:<>;q=3")));
    EXPECT_THROW(parse_ring_spec("Zmod:6^2"), ParseError);
    EXPECT_THROW(parse_ring_spec("Zmod:2"), ParseError);
    EXPECT_THROW(parse_ring_spec("Q"), ParseError);
    EXPECT_EQ(parse_kind("si"), DomainKind::Subinjective);
    EXPECT_THROW(parse_kind("xx"), ContractError);
}

TEST(Universe, Integers) {
    AbelianCategory z(Coefficients::integers());
    std::vector<std::string> lits;
    for (const auto& u : z.universe()) lits.push_back(z.format(u));
    EXPECT_EQ(lits, (std::vector<std::string>{"Z", "Z/2", "Z/3", "Z/4", "Z/9"}));
    AbelianCategory empty(Coefficients::integers(), UniverseParams{{}, 2, 0});
    EXPECT_TRUE(empty.universe().empty());
    AbelianCategory c(Coefficients::cyclic_ring(2, 3));
    EXPECT_EQ(c.universe().size(), 3u);
    EXPECT_EQ(c.ring_spec(), "Zmod:2^3");
}

TEST(Domains, IntegerExamples) {
    AbelianCategory z(Coefficients::integers());
    // Z/4 reaches everything without 2-torsion.
    EXPECT_EQ(literals(z, subprojectivity_domain(z, z.parse("Z/4")).bits),
              (std::vector<std::string>{"Z", "Z/3", "Z/9"}));
    EXPECT_EQ(literals(z, subprojectivity_domain(z, z.parse("Z/2 + Z/3")).bits), (std::vector<std::string>{"Z"}));
    EXPECT_TRUE(subprojectivity_domain(z, z.parse("Z")).bits.all());
    EXPECT_TRUE(is_subprojective(z, z.parse("Z/2"), z.parse("Z")));
    EXPECT_FALSE(is_subprojective(z, z.parse("Z/2"), z.parse("Z + Z/2")));
    EXPECT_THROW(subinjectivity_domain(z, z.parse("Z/2")), UnsupportedEnvelope);
    EXPECT_TRUE(contains(z, subprojectivity_domain(z, z.parse("Z/4")), z.parse("Z + Z/9")));
    EXPECT_FALSE(contains(z, subprojectivity_domain(z, z.parse("Z/4")), z.parse("Z + Z/2")));
    EXPECT_THROW(contains(z, subprojectivity_domain(z, z.parse("Z/4")), z.parse("Z/5")), ContractError);
}

TEST(Domains, ChainRingProjectivesAreIntersection) {
    AbelianCategory c(Coefficients::cyclic_ring(2, 3));
    Bitset meet = Bitset::full(c.universe().size());
    for (const auto& m : c.universe()) meet &= subprojectivity_domain(c, m).bits;
    EXPECT_EQ(meet, projective_members(c));
    EXPECT_EQ(literals(c, projective_members(c)), (std::vector<std::string>{"Z/2^3"}));
    for (const auto& m : c.universe()) {
        EXPECT_EQ(is_subprojective(c, m, m), c.projective(m));
        EXPECT_EQ(is_subinjective(c, m, m), c.injective(m));
    }
}

TEST(Domains, QuiverExamples) {
    QuiverCategory q(parse_line_quiver("A4:><>;q=2"));
    const auto te = q.parse("0110+0111+1100+1111");
    EXPECT_EQ(subinjectivity_domain(q, te).bits, injective_members(q));
    EXPECT_FALSE(is_subinjective(q, te, q.parse("1111")));
    EXPECT_TRUE(is_subprojective(q, q.parse("1100+0111"), q.parse("1111")));
    EXPECT_TRUE(subprojectivity_domain(q, q.parse("1100 + 0100 + 0111 + 0001")).bits.all());
}

TEST(Decision, IndependentOfPresentation) {
    // The padded cover adds a free summand and a zero column; verdicts must not move.
    for (const char* r : {"Z", "Zmod:2^3", "Zmod:3^2", "A3:<>;q=2", "A4:><>;q=3"}) {
        std::visit(
            [&](const auto& c) {
                const auto& u = c.universe();
                for (const auto& m : u)
                    for (const auto& n : u)
                        for (const auto& n2 : u) {
                            const auto nn = c.sum(n, n2);
                            EXPECT_EQ(is_subprojective(c, m, nn), is_subprojective_padded(c, m, nn))
                                << r << " " << c.format(m) << " | " << c.format(nn);
                        }
            },
            make_category(r));
    }
}

TEST(Decision, IntersectionRule) {
    for (const char* r : {"Z", "Zmod:2^2", "A3:<>;q=2", "A4:><>;q=2"}) {
        std::visit(
            [&](const auto& c) {
                const auto& u = c.universe();
                for (const auto& m : u)
                    for (const auto& m2 : u) {
                        const auto d = subprojectivity_domain(c, c.sum(m, m2)).bits;
                        EXPECT_EQ(d, subprojectivity_domain(c, m).bits & subprojectivity_domain(c, m2).bits);
                        if (c.supports_envelopes()) {
                            EXPECT_EQ(subinjectivity_domain(c, c.sum(m, m2)).bits,
                                      subinjectivity_domain(c, m).bits & subinjectivity_domain(c, m2).bits);
                        }
                    }
            },
            make_category(r));
    }
}

TEST(Decision, HomVanishingImpliesMembership) {
    AbelianCategory z(Coefficients::integers());
    for (const auto& m : z.universe()) {
        EXPECT_TRUE(hom_vanishing(z, DomainKind::Subprojective, m).subset_of(subprojectivity_domain(z, m).bits));
    }
}

TEST(Cache, RoundTripAndHits) {
    const auto path = temp_file("verdicts.txt");
    AbelianCategory c(Coefficients::cyclic_ring(2, 3));
    DomainSet first;
    {
        VerdictCache cache(path.string());
        EngineOptions opt{1, &cache};
        first = subinjectivity_domain(c, c.parse("Z/2"), opt);
        EXPECT_EQ(cache.size(), 3u);
        EXPECT_EQ(cache.hits(), 0u);
        cache.save();
    }
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, VerdictCache::kVersion);
    VerdictCache again(path.string());
    EXPECT_EQ(again.size(), 3u);
    EngineOptions opt{1, &again};
    EXPECT_EQ(subinjectivity_domain(c, c.parse("Z/2"), opt), first);
    EXPECT_EQ(again.hits(), 3u);
    EXPECT_EQ(*again.lookup(VerdictCache::key("Zmod:2^3", "Z/2", "Z/2^3", DomainKind::Subinjective)), true);
}

TEST(Cache, IgnoresForeignFiles) {
    const auto path = temp_file("foreign.txt");
    {
        std::ofstream out(path);
        out << "something else\nZ|Z|Z|sp\t1\n";
    }
    VerdictCache cache(path.string());
    EXPECT_EQ(cache.size(), 0u);
}

TEST(Parallel, DeterministicAcrossWorkers) {
    for (const char* r : {"Z", "A4:><>;q=2"}) {
        std::visit(
            [&](const auto& c) {
                for (const auto& m : c.universe()) {
                    const auto one = subprojectivity_domain(c, m, EngineOptions{1, nullptr});
                    for (unsigned w : {2u, 4u, 8u}) EXPECT_EQ(subprojectivity_domain(c, m, EngineOptions{w, nullptr}), one);
                }
            },
            make_category(r));
    }
    const auto squares = parallel_map<long>(1000, 8, [](std::size_t i) { return static_cast<long>(i * i); });
    for (std::size_t i = 0; i < squares.size(); ++i) ASSERT_EQ(squares[i], static_cast<long>(i * i));
    EXPECT_THROW(parallel_map<int>(10, 4, [](std::size_t i) -> int {
                     if (i == 7) throw ContractError("boom");
                     return 0;
                 }),
                 ContractError);
}

TEST(Families, BasicAndSocProjective) {
    AbelianCategory z(Coefficients::integers());
    EXPECT_TRUE(is_basic_sp(z, z.parse("Z/4 + Z/3")));
    EXPECT_FALSE(is_basic_sp(z, z.parse("Z + Z/2")));
    AbelianCategory c(Coefficients::cyclic_ring(2, 2));
    EXPECT_FALSE(is_strongly_soc_projective(c, c.parse("Z/2")));
    EXPECT_TRUE(is_strongly_soc_projective(c, c.parse("Z/2^2")));
    EXPECT_EQ(nontrivial_part(c, DomainKind::Subprojective, c.parse("Z/4 + Z/2")), c.parse("Z/2"));
}

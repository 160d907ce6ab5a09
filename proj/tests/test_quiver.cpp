#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "profilium/errors.hpp"
#include "profilium/quiver.hpp"
#include "oracles.hpp"

using namespace profilium;
using namespace profilium::oracle;

namespace {

const LineQuiver& a4() {
    static const LineQuiver q = parse_line_quiver("A4:><>;q=2");
    return q;
}

QuiverModule mod(const char* text) { return parse_quiver_module(text, a4()); }

}  // namespace

TEST(LineQuiver, ParseAndPrint) {
    const auto q = parse_line_quiver("A4:><>;q=3");
    EXPECT_EQ(q.vertex_count(), 4u);
    EXPECT_EQ(q.field().prime(), 3u);
    EXPECT_EQ(q.to_string(), "A4:><>;q=3");
    EXPECT_EQ(parse_line_quiver("A2:>").field().prime(), 2u);
    EXPECT_THROW(parse_line_quiver("A3:>"), ParseError);
    EXPECT_THROW(parse_line_quiver("A1:"), ParseError);
    EXPECT_THROW(parse_line_quiver("A3:>x"), ParseError);
    EXPECT_THROW(parse_line_quiver("A3:><;q=4"), ParseError);
    EXPECT_THROW(parse_line_quiver("B3:><"), ParseError);
}

TEST(QuiverModule, Literals) {
    EXPECT_EQ(mod("0110").parts(), (std::vector<Interval>{{1, 2}}));
    EXPECT_EQ(mod("[2,3]"), mod("0110"));
    EXPECT_EQ(mod("1100 + 0001").to_string(), mod("0001+1100").to_string());
    EXPECT_TRUE(mod("0").is_zero());
    EXPECT_THROW(mod("0101"), ParseError);
    EXPECT_THROW(mod("011"), ParseError);
    EXPECT_THROW(mod("[3,2]"), ParseError);
    EXPECT_THROW(mod("[0,2]"), ParseError);
    EXPECT_THROW(mod("0110 +"), ParseError);
    for (const auto& m : small_modules(4)) EXPECT_EQ(parse_quiver_module(m.to_string(), a4()), m);
}

TEST(QuiverHom, MatchesBruteForceOverF2) {
    std::size_t pairs = 0;
    for (const auto& q : small_quivers()) {
        const auto mods = small_modules(q.vertex_count());
        for (const auto& m : mods)
            for (const auto& n : mods) {
                if (m.dim_vector().total() + n.dim_vector().total() > 6) continue;
                const std::size_t count = brute_hom_count(q, m, n);
                EXPECT_EQ(std::size_t{1} << hom_dim(q, m, n), count)
                    << q.to_string() << " " << m.to_string() << " -> " << n.to_string();
                ++pairs;
            }
    }
    EXPECT_GT(pairs, 200u);
}

TEST(QuiverHom, BasisMapsIntertwine) {
    const auto m = mod("0111 + 1100"), n = mod("1111 + 0100");
    QuiverHom h(a4(), m, n);
    for (const auto& f : h.basis()) {
        for (std::size_t a = 0; a < a4().arrow_count(); ++a) {
            const auto s = a4().arrow_source(a), t = a4().arrow_target(a);
            EXPECT_EQ(f[t] * h.source_rep().arrow_maps[a], h.target_rep().arrow_maps[a] * f[s]);
        }
    }
    EXPECT_EQ(hom_dim(a4(), mod("1110"), mod("1100")), 0u);
}

TEST(Tau, MatchesDTrOracle) {
    for (const auto& q : small_quivers()) {
        for (const auto& iv : indecomposables(q)) {
            const QuiverModule m(q.vertex_count(), {iv});
            if (is_projective(q, m)) {
                EXPECT_FALSE(tau(q, iv).has_value());
                continue;
            }
            const auto t = tau(q, iv);
            ASSERT_TRUE(t.has_value());
            EXPECT_EQ(dims_of(*t, q.vertex_count()), dtr_oracle(q, iv)) << q.to_string() << " " << m.to_string();
        }
    }
}

TEST(A4, IndecomposablesProjectivesInjectives) {
    std::set<std::string> got;
    for (const auto& iv : indecomposables(a4())) got.insert(iv.dim_string(4));
    EXPECT_EQ(got, (std::set<std::string>{"1000", "0100", "0010", "0001", "1100", "0110", "0011", "1110", "0111", "1111"}));
    const char* p[] = {"1100", "0100", "0111", "0001"};
    const char* i[] = {"1000", "1110", "0010", "0011"};
    for (std::size_t v = 0; v < 4; ++v) {
        EXPECT_EQ(projective(a4(), v).dim_string(4), p[v]);
        EXPECT_EQ(injective(a4(), v).dim_string(4), i[v]);
        EXPECT_EQ(projective(a4(), v), reach(a4(), v, true));
        EXPECT_EQ(injective(a4(), v), reach(a4(), v, false));
    }
}

TEST(A4, TauArrows) {
    // Dotted arrows of the AR quiver.
    const std::vector<std::pair<const char*, const char*>> arrows{
        {"0011", "1100"}, {"1111", "0100"}, {"0010", "1111"}, {"1110", "0111"}, {"0110", "0001"}, {"1000", "0110"}};
    for (const auto& [from, to] : arrows) EXPECT_EQ(tau(a4(), mod(from)).to_string(), mod(to).to_string()) << from;
    EXPECT_EQ(tau(a4(), mod("1000 + 1110 + 0010 + 0011")), mod("0110 + 0111 + 1111 + 1100"));
    EXPECT_TRUE(tau(a4(), mod("1100 + 0001")).is_zero());
}

TEST(A4, TopSocleCoverEnvelope) {
    EXPECT_EQ(socle(a4(), materialize(a4(), mod("0111"))).to_string(), "0101");
    EXPECT_EQ(top(a4(), materialize(a4(), mod("0111"))).to_string(), "0010");
    const auto c = projective_cover(a4(), mod("0100"));
    EXPECT_EQ(c.cover, mod("0100"));
    const auto e = injective_envelope(a4(), mod("0100"));
    EXPECT_EQ(e.envelope, mod("1110"));
    const auto cover = projective_cover(a4(), mod("1111"));
    EXPECT_TRUE(is_projective(a4(), cover.cover));
    EXPECT_EQ(cover.cover, mod("1100 + 0111"));
}

TEST(Ext, EulerFormAndValues) {
    const auto a2 = parse_line_quiver("A2:>;q=2");
    const auto s1 = parse_quiver_module("10", a2), s2 = parse_quiver_module("01", a2);
    EXPECT_EQ(euler_form(a2, s1.dim_vector(), s2.dim_vector()), -1);
    EXPECT_EQ(ext1_dim(a2, s1, s2), 1u);
    EXPECT_EQ(ext1_dim(a2, s2, s1), 0u);
    const auto e = mod("1000 + 1110 + 0010 + 0011");
    EXPECT_EQ(ext1_dim(a4(), e, e), 0u);
    for (std::size_t v = 0; v < 4; ++v) {
        const QuiverModule p(4, {projective(a4(), v)});
        for (const auto& iv : indecomposables(a4())) EXPECT_EQ(ext1_dim(a4(), p, QuiverModule(4, {iv})), 0u);
    }
    for (const char* s : {"A2:>;q=2", "A3:<>;q=2", "A4:><>;q=3"}) {
        const auto q = parse_line_quiver(s);
        for (const auto& x : indecomposables(q))
            for (const auto& y : indecomposables(q)) {
                const QuiverModule mx(q.vertex_count(), {x}), my(q.vertex_count(), {y});
                EXPECT_EQ(static_cast<std::int64_t>(hom_dim(q, mx, my)) - static_cast<std::int64_t>(ext1_dim(q, mx, my)),
                          euler_form(q, mx.dim_vector(), my.dim_vector()));
            }
    }
}

TEST(Coxeter, ActsAsTauOnDimensionVectors) {
    const auto phi = coxeter_matrix(a4());
    for (const auto& iv : indecomposables(a4())) {
        const QuiverModule m(4, {iv});
        if (is_projective(a4(), m)) continue;
        ExactMatrix d(Coefficients::integers(), 4, 1);
        for (std::size_t v = 0; v < 4; ++v) d.set(v, 0, iv.contains(v) ? 1 : 0);
        const auto t = phi * d;
        const auto want = tau(a4(), m).dim_vector();
        for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(t(v, 0), want.dims[v]);
    }
}

TEST(Tilting, InjectivesAndGen) {
    const auto e = mod("1000 + 1110 + 0010 + 0011");
    EXPECT_TRUE(is_tilting(a4(), e));
    EXPECT_TRUE(is_tilting(a4(), mod("1100 + 0100 + 0111 + 0001")));
    EXPECT_FALSE(is_tilting(a4(), mod("1100 + 0100")));
    EXPECT_FALSE(is_tilting(a4(), mod("0110 + 1000 + 0010 + 0011")));
    std::set<std::string> gen;
    for (const auto& iv : indecomposables(a4()))
        if (is_generated_by(a4(), e, QuiverModule(4, {iv}))) gen.insert(iv.dim_string(4));
    EXPECT_EQ(gen, (std::set<std::string>{"1000", "1110", "0010", "0011"}));
    const auto te = mod("0110 + 0111 + 1111 + 1100");
    std::set<std::string> cogen;
    for (const auto& iv : indecomposables(a4()))
        if (is_cogenerated_by(a4(), te, QuiverModule(4, {iv}))) cogen.insert(iv.dim_string(4));
    // The torsion-free class of the pair is the complement of Gen(E).
    EXPECT_EQ(cogen, (std::set<std::string>{"0100", "0001", "1100", "0110", "0111", "1111"}));
}

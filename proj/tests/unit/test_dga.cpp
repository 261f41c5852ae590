#include "kch/dga/dga.hpp"
#include "kch/dga/dga_json.hpp"
#include "kch/errors.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kch;
using kch::testing::random_braid;

namespace {

NCPoly P(const std::string &s, const RingPtr &r) { return parse_ncpoly(s, r); }

Letter L(LetterKind k, int i, int j) { return Letter::chord(k, i, j); }

DgaMode mode(DgaVariant v, AlgebraMode a = AlgebraMode::Commuted) { return {v, a, {}}; }

} // namespace

TEST(DGA, UnknotTopological) {
    DGA d = build_dga(parse_braid("", 1));
    const RingPtr &r = d.ring;
    EXPECT_EQ(r->vars, (std::vector<std::string>{"la", "mu", "U"}));
    ASSERT_EQ(d.generators.size(), 4u);
    EXPECT_EQ(d.d(L(LetterKind::C, 1, 1)), P("U - mu - la + la*mu", r));
    EXPECT_EQ(d.d(L(LetterKind::D, 1, 1)), P("1 - mu - U*la^-1 + mu*la^-1", r));
    EXPECT_EQ(d.d(L(LetterKind::E, 1, 1)), P("-c11 + (-la) d11", r));
    EXPECT_EQ(d.d(L(LetterKind::F, 1, 1)), P("-d11 + (-la^-1) c11", r));
    EXPECT_TRUE(check_d_squared(d).pass);
}

TEST(DGA, HatUnknot) {
    DGA d = build_dga(parse_braid("", 1), mode(DgaVariant::Hat));
    EXPECT_EQ(d.ring->vars, (std::vector<std::string>{"la", "mu"}));
    EXPECT_EQ(d.mode.variant, DgaVariant::Hat);
    EXPECT_EQ(d.d(L(LetterKind::C, 1, 1)), P("-mu - la + la*mu", d.ring));
}

TEST(DGA, TrefoilLongitudeEntry) {
    // d c22 = U - mu - (L Phi^L A)_22 sees only the trivial L entry, while
    // d c11 carries la mu^3 U^-1 from the leading strand.
    DGA d = build_dga(parse_braid("1 1 1"));
    bool saw = false;
    for (const auto &[w, c] : d.d(L(LetterKind::C, 1, 1)).terms())
        if (c.mentions(d.ring->index_of("la"))) {
            saw = true;
            EXPECT_EQ(c.min_exponent(d.ring->index_of("U")), -1) << c.to_string(d.ring->vars);
        }
    EXPECT_TRUE(saw);
    for (const auto &[w, c] : d.d(L(LetterKind::C, 2, 2)).terms())
        EXPECT_FALSE(c.mentions(d.ring->index_of("la")));
    EXPECT_TRUE(check_d_squared(d).pass);
}

TEST(DGA, TransverseHasNoNegativeU) {
    for (auto v : {DgaVariant::TransverseU, DgaVariant::TransverseUV}) {
        DGA d = build_dga(parse_braid("1 1 1"), mode(v));
        int u = d.ring->index_of("U");
        for (const auto &[g, dg] : d.diff)
            for (const auto &[w, c] : dg.terms())
                EXPECT_GE(c.min_exponent(u), 0);
        EXPECT_TRUE(d.ring->u_nonnegative);
    }
}

TEST(DGA, DSquaredRandomAllModes) {
    std::mt19937 rng(7);
    const DgaVariant vs[] = {DgaVariant::Topological, DgaVariant::TransverseU,
                             DgaVariant::TransverseUV, DgaVariant::Hat};
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + trial % 3;
        BraidWord b = random_braid(rng, n, 2 + trial % 5);
        for (auto v : vs)
            for (auto a : {AlgebraMode::Commuted, AlgebraMode::FullyNoncommutative}) {
                DGA d = build_dga(b, mode(v, a));
                D2Report rep = check_d_squared(d);
                EXPECT_TRUE(rep.pass) << b.to_string() << " " << variant_name(v) << " "
                                      << (rep.offender ? letter_name(*rep.offender) : "")
                                      << " residue " << (rep.residue ? rep.residue->to_string() : "");
                EXPECT_EQ(rep.checked, static_cast<int>(d.generators.size()));
            }
    }
}

TEST(DGA, StarChoicesForCommutedKnot) {
    BraidWord b = parse_braid("1 1 1");
    for (auto s : {StarStrand::Low0, StarStrand::HighNPlus1}) {
        DgaMode m{DgaVariant::Topological, AlgebraMode::Commuted, s};
        EXPECT_TRUE(check_d_squared(build_dga(b, m)).pass);
    }
    DgaMode bad{DgaVariant::Topological, AlgebraMode::FullyNoncommutative, StarStrand::HighNPlus1};
    EXPECT_THROW(build_dga(b, bad), DomainError);
    DgaMode bad_link{DgaVariant::Topological, AlgebraMode::Commuted, StarStrand::HighNPlus1};
    EXPECT_THROW(build_dga(parse_braid("1 1"), bad_link), DomainError);
}

TEST(DGA, UVAtVOneIsTransverse) {
    for (const char *w : {"1 1 1", "1 -2 1 -2", "1 1 2 2 2"}) {
        BraidWord b = parse_braid(w);
        DGA uv = specialize(build_dga(b, mode(DgaVariant::TransverseUV)), {{"V", Laurent(1)}});
        EXPECT_EQ(uv, build_dga(b, mode(DgaVariant::TransverseU))) << w;
    }
}

TEST(DGA, SpecializeRules) {
    DGA top = build_dga(parse_braid("1 1 1"));
    EXPECT_THROW(specialize(top, {{"U", Laurent(0)}}), DomainError);
    EXPECT_THROW(specialize(top, {{"W", Laurent(1)}}), DomainError);
    DGA u1 = specialize(top, {{"U", Laurent(1)}});
    EXPECT_EQ(u1.ring->vars, (std::vector<std::string>{"la", "mu"}));
    EXPECT_TRUE(check_d_squared(u1).pass);
    int mu = top.ring->index_of("mu");
    DGA self = specialize(top, {{"mu", Laurent::variable(mu, 2)}});
    EXPECT_EQ(self.ring->vars, top.ring->vars);
    EXPECT_TRUE(check_d_squared(self).pass);
}

TEST(DGA, CorruptedDifferentialIsCaught) {
    DGA d = build_dga(parse_braid("", 1));
    d.diff.at(L(LetterKind::C, 1, 1)) += NCPoly::constant(d.ring, 1);
    D2Report rep = check_d_squared(d);
    EXPECT_FALSE(rep.pass);
    ASSERT_TRUE(rep.offender.has_value());
    EXPECT_EQ(*rep.offender, L(LetterKind::E, 1, 1));
    EXPECT_EQ(*rep.residue, NCPoly::constant(d.ring, -1));
}

TEST(DGA, Stabilization) {
    DGA d = build_dga(parse_braid("1 1 1"));
    DGA s = stabilize(stabilize(d, 1), 3);
    EXPECT_EQ(s.generators.size(), d.generators.size() + 4);
    EXPECT_TRUE(check_d_squared(s).pass);
    Letter e1 = Letter::stab(3, 3), e2 = Letter::stab(4, 2);
    EXPECT_EQ(s.d(e1), NCPoly::letter(s.ring, e2));
    EXPECT_TRUE(s.d(e2).is_zero());
    EXPECT_EQ(s.generators_of_degree(0).size(), d.generators_of_degree(0).size() + 1);
    EXPECT_THROW(stabilize(d, 0), DomainError);
}

TEST(DGA, SublinkQuotientMatchesSubBraid) {
    struct Case {
        const char *braid;
        std::vector<int> keep;
    };
    const Case cases[] = {{"1 1", {1}}, {"1 1", {2}}, {"1 1 2 2 2", {2, 3}},
                          {"1 1 2 2 2", {1}}, {"1 2 -1 2 3 3", {1, 2, 3}}};
    for (const auto &c : cases) {
        BraidWord b = parse_braid(c.braid);
        for (auto a : {AlgebraMode::Commuted, AlgebraMode::FullyNoncommutative})
            for (auto v : {DgaVariant::Topological, DgaVariant::TransverseU, DgaVariant::Hat}) {
                DGA q = sublink_quotient(build_dga(b, mode(v, a)), c.keep);
                DgaMode m{v, a, StarStrand::Low0};
                DGA expect = build_dga(sub_braid(b, c.keep), m);
                EXPECT_EQ(q, expect) << c.braid << " " << variant_name(v);
            }
    }
}

TEST(DGA, SublinkQuotientRejectsSplitComponents) {
    DGA d = build_dga(parse_braid("1 1 2 2 2"));
    EXPECT_THROW(sublink_quotient(d, {2}), DomainError);
    EXPECT_THROW(sublink_quotient(d, {}), DomainError);
    EXPECT_THROW(sublink_quotient(d, {4}), DomainError);
}

TEST(DGA, NoncommutativeLeadingEntry) {
    DgaMode m = mode(DgaVariant::Topological, AlgebraMode::FullyNoncommutative);
    DGA d = build_dga(parse_braid("", 1), m);
    EXPECT_EQ(d.ring->vars, (std::vector<std::string>{"U"}));
    EXPECT_EQ(d.d(L(LetterKind::C, 1, 1)), P("U - mu1 - la1 + la1 mu1", d.ring));
}

TEST(DGA, Json) {
    DGA d = build_dga(parse_braid("", 1));
    auto j = dga_to_json(d);
    EXPECT_EQ(j["variant"], "topological");
    EXPECT_EQ(j["generators"].size(), 4u);
    EXPECT_EQ(j["generators"][0]["name"], "c11");
    EXPECT_EQ(j["generators"][0]["degree"], 1);
    EXPECT_EQ(j["differential"][2]["generator"], "e11");
    EXPECT_EQ(parse_ncpoly(j["differential"][0]["image"].get<std::string>(), d.ring),
              d.d(L(LetterKind::C, 1, 1)));
}

#include "kch/errors.hpp"
#include "kch/ncalg/eval.hpp"
#include "kch/ncalg/ncmatrix.hpp"
#include "kch/ncalg/ncpoly.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace kch;
using kch::testing::knot_ring;
using kch::testing::random_poly;

namespace {

NCPoly P(const std::string &s, const RingPtr &r) { return parse_ncpoly(s, r); }

} // namespace

TEST(Laurent, ParseAndPrint) {
    std::vector<std::string> names{"la", "mu", "U"};
    Laurent c = parse_laurent("U - la - mu + la*mu", names);
    EXPECT_EQ(c.to_string(names), "-la - mu + U + la*mu");
    EXPECT_EQ(parse_laurent(c.to_string(names), names), c);
    Laurent d = parse_laurent("(1 - mu)*la^-1", names);
    EXPECT_EQ(d, parse_laurent("la^-1 - la^-1*mu", names));
    EXPECT_THROW(parse_laurent("x + 1", names), DomainError);
    EXPECT_THROW(parse_laurent("(1 + mu", names), DomainError);
}

TEST(Laurent, UnitsAndPowers) {
    Laurent la = Laurent::variable(0);
    EXPECT_EQ(la.pow(-2) * la.pow(2), Laurent(1));
    EXPECT_FALSE((la + 1).unit_inverse().has_value());
    EXPECT_THROW((la + 1).pow(-1), DomainError);
    EXPECT_EQ((la + 1).pow(3), la.pow(3) + 3 * la.pow(2) + 3 * la + 1);
}

TEST(Laurent, Substitute) {
    std::vector<std::string> names{"la", "mu", "U"};
    Laurent c = parse_laurent("U - la - mu + la*mu", names);
    EXPECT_EQ(c.substitute(2, Laurent(0)), parse_laurent("-la - mu + la*mu", names));
    Laurent d = parse_laurent("la^-1*U", names);
    EXPECT_THROW(d.substitute(0, Laurent(0)), DomainError);
}

TEST(NCPoly, UnitLawAndNoncommutativity) {
    auto r = knot_ring();
    NCPoly a12 = P("a12", r), a21 = P("a21", r);
    EXPECT_EQ(NCPoly::constant(r, 1) * a12, a12);
    EXPECT_EQ((a21 * (a12 * a21)).to_string(), "a21 a12 a21");
    EXPECT_NE(a21 * a12, a12 * a21);
}

TEST(NCPoly, Distributivity) {
    auto r = knot_ring();
    EXPECT_EQ(P("mu a12 + a23", r) * P("a13", r), P("(mu) a12 a13 + a23 a13", r));
}

TEST(NCPoly, SerializationFormat) {
    auto r = knot_ring();
    NCPoly p = P("-2 a21 a13 + a21 a12 a21 a13 + a23 - a21 a12 a23", r);
    EXPECT_EQ(p.to_string(), "a23 + (-2) a21 a13 + (-1) a21 a12 a23 + a21 a12 a21 a13");
    EXPECT_EQ(P(p.to_string(), r), p);
    EXPECT_EQ(P("(U - la) c11 + 1", r).to_string(), "1 + (-la + U) c11");
    EXPECT_EQ(NCPoly(r).to_string(), "0");
    EXPECT_EQ(P("(2 - mu)", r).to_string(), "(2 - mu)");
}

TEST(NCPoly, ParseErrors) {
    auto r = knot_ring();
    EXPECT_THROW(P("a12 +", r), DomainError);
    EXPECT_THROW(P("q7", r), DomainError);
    EXPECT_THROW(P("mu1 a12", r), DomainError); // homology letter in commuted mode
    EXPECT_THROW(P("", r), DomainError);
}

TEST(NCPoly, RingMismatch) {
    auto r1 = knot_ring();
    auto r2 = make_ring({"la1", "la2", "mu1", "mu2", "U"});
    EXPECT_THROW(nc_mul(P("a12", r1), P("a12", r2)), ConfigError);
    EXPECT_THROW(P("a12", r1) + P("a12", r2), ConfigError);
    auto nc = make_ring({"U"}, AlgebraMode::FullyNoncommutative);
    EXPECT_THROW(P("a12", r1) * P("a12", nc), ConfigError);
}

TEST(NCPoly, HomologyLettersMerge) {
    auto nc = make_ring({"U"}, AlgebraMode::FullyNoncommutative);
    NCPoly w = NCPoly::word(nc, {Letter::homology(LetterKind::MuTilde, 2, 1),
                                 Letter::homology(LetterKind::MuTilde, 2, -1)});
    EXPECT_EQ(w, NCPoly::constant(nc, 1));
    NCPoly x = P("mu1 a12 mu1^-1", nc);
    EXPECT_EQ(x.terms()[0].first.size(), 3u);
    EXPECT_EQ((P("mu1", nc) * P("mu1^-1 a12", nc)).to_string(), "a12");
    // Distinct groups do not commute.
    EXPECT_NE(P("mu1 mu2", nc), P("mu2 mu1", nc));
    EXPECT_NE(P("mu1 a12", nc), P("a12 mu1", nc));
    // Longitude and meridian of one component commute.
    EXPECT_EQ(P("mu1 la1", nc), P("la1 mu1", nc));
    EXPECT_EQ(P("la1 mu1^3 mu1^-3 la1^-1", nc), NCPoly::constant(nc, 1));
}

TEST(NCPoly, DegreeInfo) {
    auto r = knot_ring();
    EXPECT_EQ(NCPoly(r).degree_info().kind, NCPoly::DegreeKind::Zero);
    auto h = P("a12 c21 + b12", r).degree_info();
    EXPECT_EQ(h.kind, NCPoly::DegreeKind::Homogeneous);
    EXPECT_EQ(h.degree, 1);
    EXPECT_EQ(P("a12 + e11", r).degree_info().kind, NCPoly::DegreeKind::Mixed);
}

TEST(NCPoly, RingAxiomsRandomized) {
    std::mt19937 rng(7);
    for (auto mode : {AlgebraMode::Commuted, AlgebraMode::FullyNoncommutative}) {
        auto r = mode == AlgebraMode::Commuted ? knot_ring() : make_ring({"U"}, mode);
        for (int it = 0; it < 60; ++it) {
            NCPoly a = random_poly(rng, r, 3, 4, 3);
            NCPoly b = random_poly(rng, r, 3, 4, 3);
            NCPoly c = random_poly(rng, r, 3, 4, 3);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a + b) * c, a * c + b * c);
            EXPECT_EQ(a + b, b + a);
            EXPECT_TRUE((a - a).is_zero());
            EXPECT_EQ(P(a.to_string(), r), a);
            EXPECT_EQ(P(P(a.to_string(), r).to_string(), r).to_string(), a.to_string());
        }
    }
}

namespace {

// Arbitrary differential on chords: a -> 0, b/c/d -> random degree-0,
// e/f -> random degree-1 expression in c and d.
LetterMap random_images(std::mt19937 &rng, const RingPtr &r) {
    auto cache = std::make_shared<std::map<Letter, NCPoly>>();
    return [cache, &rng, r](const Letter &l) -> std::optional<NCPoly> {
        auto it = cache->find(l);
        if (it != cache->end())
            return it->second;
        NCPoly img(r);
        int deg = letter_degree(l);
        if (deg == 1)
            img = random_poly(rng, r, 3, 3, 2, true);
        else if (deg == 2)
            img = P("c12 a21 - a13 d31 + c22", r) * NCPoly::constant(r, 1 + static_cast<int>(rng() % 3));
        cache->emplace(l, img);
        return img;
    };
}

} // namespace

TEST(NCPoly, LeibnizRuleRandomized) {
    std::mt19937 rng(11);
    auto r = knot_ring();
    for (int it = 0; it < 60; ++it) {
        auto images = random_images(rng, r);
        // Homogeneous p of degree 0, 1 or 2.
        NCPoly p = P(std::vector<std::string>{"a12 a23", "c12 a21 + a13 d31", "e11 + c12 d21"}[it % 3], r);
        NCPoly q = random_poly(rng, r, 3, 3, 3);
        int dp = p.degree_info().degree;
        NCPoly lhs = nc_derive(p * q, images);
        NCPoly rhs = nc_derive(p, images) * q +
                     (dp % 2 ? -(p * nc_derive(q, images)) : p * nc_derive(q, images));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(NCPoly, DeriveExamples) {
    auto r = knot_ring();
    LetterMap zero = [&](const Letter &) { return std::optional<NCPoly>(NCPoly(r)); };
    EXPECT_TRUE(nc_derive(P("a12 a21", r), zero).is_zero());
    LetterMap cd = [&](const Letter &l) -> std::optional<NCPoly> {
        if (l == Letter::chord(LetterKind::C, 1, 1))
            return P("a12", r);
        if (l == Letter::chord(LetterKind::D, 1, 1))
            return P("a21", r);
        return std::nullopt;
    };
    EXPECT_EQ(nc_derive(P("c11 d11", r), cd), P("a12 d11 - c11 a21", r));
    EXPECT_THROW(nc_derive(P("b12", r), cd), DomainError);
}

TEST(NCPoly, UnknotDifferentialSquaresToZero) {
    auto r = knot_ring();
    std::map<Letter, NCPoly> d{
        {Letter::chord(LetterKind::C, 1, 1), P("U - la - mu + la*mu", r)},
        {Letter::chord(LetterKind::D, 1, 1), P("1 - mu - la^-1*U + la^-1*mu", r)},
        {Letter::chord(LetterKind::E, 1, 1), P("-c11 - la d11", r)},
        {Letter::chord(LetterKind::F, 1, 1), P("-d11 - la^-1 c11", r)},
    };
    LetterMap img = [&](const Letter &l) -> std::optional<NCPoly> {
        auto it = d.find(l);
        if (it == d.end())
            return std::nullopt;
        return it->second;
    };
    for (const auto &[g, dg] : d)
        EXPECT_TRUE(nc_derive(dg, img).is_zero()) << letter_name(g);
}

TEST(NCPoly, Substitute) {
    auto r = knot_ring();
    LetterMap swap = [&](const Letter &l) -> std::optional<NCPoly> {
        if (l.kind == LetterKind::A)
            return NCPoly::letter(r, Letter::a(l.j, l.i), -1);
        return std::nullopt;
    };
    EXPECT_EQ(substitute(P("a12 a23 + mu c11", r), swap), P("a21 a32 + mu c11", r));
}

TEST(NCPoly, UnitInverse) {
    auto nc = make_ring({"U"}, AlgebraMode::FullyNoncommutative);
    NCPoly l = P("(-U^2) la1 mu1^3", nc);
    auto li = l.unit_inverse();
    ASSERT_TRUE(li);
    EXPECT_EQ(l * *li, NCPoly::constant(nc, 1));
    EXPECT_FALSE(P("a12", nc).unit_inverse());
    EXPECT_FALSE(P("1 + mu1", nc).unit_inverse());
}

TEST(NCEval, Examples) {
    auto r = knot_ring();
    Assignment<IntegerRing> a;
    a.vars = {{"la", 1}, {"mu", 1}, {"U", 1}};
    EXPECT_EQ(nc_eval(P("U - la - mu + la*mu", r), a), 0);

    a.vars = {{"la", 1}, {"mu", -1}, {"U", 1}};
    a.chords[Letter::a(1, 2)] = -2;
    EXPECT_EQ(nc_eval(P("U a12 a12 - (mu*U) a12 + (la*mu^3 - la*mu^4)", r), a), 0);

    Assignment<PrimeField> f;
    f.ring = PrimeField(5);
    f.chords = {{Letter::a(1, 2), 2}, {Letter::a(2, 1), 3}};
    EXPECT_EQ(nc_eval(P("a12 a21", r), f), 1);
}

TEST(NCEval, Errors) {
    auto r = knot_ring();
    Assignment<IntegerRing> a;
    a.vars = {{"la", 2}, {"mu", 1}, {"U", 1}};
    EXPECT_THROW(nc_eval(P("la^-1", r), a), DomainError);
    EXPECT_THROW(nc_eval(P("la", r), a), DomainError); // non-unit assigned
    a.vars["la"] = 1;
    EXPECT_THROW(nc_eval(P("a12", r), a), DomainError);
    EXPECT_EQ(nc_eval(P("c11", r), a), 0); // positive degree evaluates to 0
}

TEST(NCEval, HomomorphismRandomized) {
    std::mt19937 rng(3);
    auto r = knot_ring();
    Assignment<PrimeField> f;
    f.ring = PrimeField(7);
    f.vars = {{"la", 3}, {"mu", 5}, {"U", 2}};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j)
                f.chords[Letter::a(i, j)] = (i * 3 + j) % 7;
    for (int it = 0; it < 50; ++it) {
        NCPoly p = random_poly(rng, r, 3, 4, 3, true);
        NCPoly q = random_poly(rng, r, 3, 4, 3, true);
        EXPECT_EQ(nc_eval(p + q, f), f.ring.add(nc_eval(p, f), nc_eval(q, f)));
        EXPECT_EQ(nc_eval(p * q, f), f.ring.mul(nc_eval(p, f), nc_eval(q, f)));
    }
}

TEST(NCMatrix, Basics) {
    auto r = knot_ring();
    NCMatrix m(r, 2, 2);
    m.at(0, 0) = P("a12", r);
    m.at(0, 1) = P("1 - mu", r);
    m.at(1, 0) = P("a21 a12", r);
    NCMatrix id = NCMatrix::identity(r, 2);
    EXPECT_EQ(mat_mul(id, m), m);
    EXPECT_EQ(mat_mul(m, id), m);
    EXPECT_EQ(mat_conj_diag(m, {NCPoly::constant(r, 1), NCPoly::constant(r, 1)}), m);
    NCMatrix c = mat_conj_diag(m, {P("la", r), NCPoly::constant(r, 1)});
    EXPECT_EQ(c.at(0, 1), P("la - la*mu", r));
    EXPECT_EQ(c.at(1, 0), P("la^-1 a21 a12", r));
    EXPECT_THROW(m.at(2, 0), DomainError);
    EXPECT_THROW(mat_mul(m, NCMatrix(r, 3, 1)), DomainError);
    EXPECT_TRUE(mat_sub(m, m) == NCMatrix(r, 2, 2));
}

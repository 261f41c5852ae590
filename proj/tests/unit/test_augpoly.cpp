#include "kch/augpoly/augpoly.hpp"
#include "kch/augpoly/polyalg.hpp"
#include "kch/errors.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kch;

namespace {

const std::vector<std::string> kLMU = {"la", "mu", "U"};
const std::vector<std::string> kLM = {"la", "mu"};

CommPoly P(const std::string &s, const std::vector<std::string> &vars = kLMU) {
    return parse_commpoly(s, vars);
}

const char *kRH = "(U^3 - mu*U^2) + (-U^3 + mu*U^2 - 2*mu^2*U + 2*mu^2*U^2 + mu^3*U - mu^4*U)*la"
                  " + (-mu^3 + mu^4)*la^2";
const char *kLH = "(mu^3*U^2 - mu^4*U) + (U^2 - mu*U^2 - 2*mu^2*U + 2*mu^2*U^2 - mu^3*U + mu^4)*la"
                  " + (-U^2 + mu*U^2)*la^2";

AugPolyOptions with_method(ElimMethod m) {
    AugPolyOptions o;
    o.method = m;
    return o;
}

} // namespace

TEST(CommPoly, ParseAndPrint) {
    CommPoly p = P("3*(la - 1)^2 - U");
    EXPECT_EQ(p.to_string(), "3*la^2 - 6*la - U + 3");
    EXPECT_EQ(P("la*mu^-1").min_exponents(), (Exps{1, -1, 0}));
    EXPECT_THROW(P("x + 1"), DomainError);
    EXPECT_TRUE((P("la*mu") - P("mu*la")).is_zero());
}

TEST(CommPoly, Abelianize) {
    RingPtr r = make_ring(kLMU);
    NCPoly comm = parse_ncpoly("a12*a21 - a21*a12", r);
    EXPECT_TRUE(abelianize(comm, abelian_vars(r, {comm})).is_zero());

    NCPoly rel = parse_ncpoly("U*a12^2 - mu*U*a12 + la*mu^3*(1 - mu)", r);
    auto vars = abelian_vars(r, {rel});
    EXPECT_EQ(vars, (std::vector<std::string>{"la", "mu", "U", "a12"}));
    EXPECT_EQ(abelianize(rel, vars), P("U*a12^2 - mu*U*a12 + la*mu^3 - la*mu^4", vars));

    NCPoly lau = parse_ncpoly("la^-1*a12 - mu^-2", r);
    UnitNormalized n = normalize_units(abelianize(lau, abelian_vars(r, {lau})));
    EXPECT_EQ(n.shift, (Exps{1, 2, 0, 0}));
    EXPECT_EQ(n.poly, P("la - mu^2*a12", {"la", "mu", "U", "a12"}));

    NCPoly bad = parse_ncpoly("b12", r);
    EXPECT_THROW(abelianize(bad, abelian_vars(r, {bad})), DomainError);
}

TEST(PolyAlg, Resultant) {
    std::vector<std::string> v = {"x", "a", "b"};
    EXPECT_EQ(resultant(P("x^2 - 1", v), P("x - 2", v), 0), P("3", v));
    EXPECT_EQ(resultant(P("x - a", v), P("x - b", v), 0), P("a - b", v));
    CommPoly f = P("x^3 - a*x + b", v);
    EXPECT_TRUE(resultant(f, f, 0).is_zero());
    EXPECT_THROW(resultant(P("a", v), f, 0), DomainError);
    // Discriminant of a cubic: res(f, f') = -(-4a^3 + 27b^2) for monic x^3 - a x + b.
    EXPECT_EQ(resultant(f, f.derivative(0), 0), P("-4*a^3 + 27*b^2", v));
}

TEST(PolyAlg, GcdRadicalNormalize) {
    CommPoly a = P("la - 1"), b = P("mu*la + U");
    CommPoly g = poly_gcd(a * a * b, a * P("mu - 1"));
    EXPECT_TRUE(equal_up_to_units(g, a));
    EXPECT_TRUE(equal_up_to_units(radical(a * a * b * CommPoly::constant(kLMU, 6)), a * b));
    UnitNormalized n = normalize_units(P("-4*la^2*mu + 4*la*U^-1"));
    EXPECT_EQ(n.poly, P("la*mu*U - 1"));
    EXPECT_EQ(n.scale, BigInt(-4));
}

TEST(PolyAlg, ModularGcdMatchesRemainderSequences) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-4, 4), e(0, 3);
    auto random = [&](int terms) {
        CommPoly q(kLMU);
        for (int k = 0; k < terms; ++k)
            q.add_term({e(rng), e(rng), e(rng)}, c(rng));
        return q;
    };
    for (int t = 0; t < 30; ++t) {
        CommPoly common = random(3), f = random(4) * common, g = random(3) * common;
        if (common.is_zero() || f.is_zero() || g.is_zero())
            continue;
        CommPoly a = poly_gcd(f, g), b = poly_gcd_prs(f, g);
        EXPECT_EQ(a, b) << f << " | " << g;
        EXPECT_TRUE(exact_divide(a, common.divided_by(common.content())).has_value());
    }
    // Large coefficients force several primes.
    CommPoly big = P("123456789012345*la^2*mu - 98765432109876*U + 5");
    EXPECT_EQ(poly_gcd(big * P("la - U"), big * P("mu + 3")), big);
}

TEST(Groebner, SmallIdeals) {
    std::vector<std::string> v = {"x", "y"};
    auto e = eliminate({P("x - 1", v), P("y - x", v)}, {"x"});
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0], P("y - 1", {"y"}));
    auto one = groebner_lex({P("1", v), P("x*y", v)});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], P("1", v));
    // Intersection of a circle and a line eliminates to a quadratic in y.
    auto c = eliminate({P("x^2 + y^2 - 5", v), P("x - 2*y", v)}, {"x"});
    ASSERT_EQ(c.size(), 1u);
    EXPECT_TRUE(equal_up_to_units(c[0], P("y^2 - 1", {"y"})));
}

TEST(Groebner, Caps) {
    std::vector<std::string> v = {"x", "y", "z"};
    GroebnerOptions tight;
    tight.max_vars = 2;
    EXPECT_THROW(groebner_lex({P("x - y*z", v)}, tight), ResourceLimit);
}

TEST(AugPoly, Unknot) {
    for (auto m : {ElimMethod::Resultant, ElimMethod::Groebner}) {
        BraidWord u = parse_braid("", 1);
        EXPECT_EQ(augmentation_polynomial(u, with_method(m)).candidate, P("U - la - mu + la*mu"));
        EXPECT_EQ(two_variable_augpoly(u, with_method(m)).candidate, P("(la - 1)*(mu - 1)", kLM));
    }
}

TEST(AugPoly, Trefoils) {
    for (auto m : {ElimMethod::Resultant, ElimMethod::Groebner}) {
        EliminationResult rh = augmentation_polynomial(parse_braid("1 1 1"), with_method(m));
        EXPECT_TRUE(equal_up_to_units(rh.candidate, P(kRH))) << rh.candidate;
        EXPECT_EQ(rh.candidate, normalize_units(P(kRH)).poly);
        EXPECT_TRUE(rh.uncertified.empty());
        EXPECT_GT(rh.points_checked, 0u);
        EliminationResult lh = augmentation_polynomial(parse_braid("-1 -1 -1"), with_method(m));
        EXPECT_TRUE(equal_up_to_units(lh.candidate, P(kLH))) << lh.candidate;
    }
}

TEST(AugPoly, TwoVariableTrefoils) {
    auto rh = two_variable_augpoly(parse_braid("1 1 1")).candidate;
    EXPECT_TRUE(equal_up_to_units(rh, P("(la - 1)*(mu - 1)*(la*mu^3 + 1)", kLM))) << rh;
    auto lh = two_variable_augpoly(parse_braid("-1 -1 -1")).candidate;
    EXPECT_TRUE(equal_up_to_units(lh, P("(la - 1)*(mu - 1)*(la + mu^3)", kLM))) << lh;
}

TEST(AugPoly, ThreeVariableAtUOne) {
    CommPoly rh = P(kRH);
    CommPoly at1 = rh.substitute(2, CommPoly::constant(kLMU, 1)).with_vars(kLM);
    EXPECT_TRUE(equal_up_to_units(at1, P("(la - 1)*(mu - 1)*(la*mu^3 + 1)", kLM)));
}

TEST(AugPoly, RoutesAgreeOnTwoStrandBraids) {
    for (const char *w : {"1", "-1", "1 1 1", "-1 -1 -1", "1 -1 1"}) {
        BraidWord b = parse_braid(w, 2);
        auto r = augmentation_polynomial(b, with_method(ElimMethod::Resultant));
        auto g = augmentation_polynomial(b, with_method(ElimMethod::Groebner));
        EXPECT_EQ(r.candidate, g.candidate) << w;
        auto r2 = two_variable_augpoly(b, with_method(ElimMethod::Resultant));
        auto g2 = two_variable_augpoly(b, with_method(ElimMethod::Groebner));
        EXPECT_EQ(r2.candidate, g2.candidate) << w;
    }
}

TEST(AugPoly, StructuralProperties) {
    CommPoly lm1 = P("(la - 1)*(mu - 1)", kLM);
    for (const char *w : {"1", "1 1 1", "-1 -1 -1", "1 1 1 1 1", "1 2 1 2", "1 -2 1 -2"}) {
        BraidWord b = parse_braid(w);
        auto two = two_variable_augpoly(b).candidate;
        EXPECT_TRUE(exact_divide(two, lm1).has_value()) << w << ": " << two;
        auto three = augmentation_polynomial(b).candidate;
        // Squarefree and normalized.
        EXPECT_EQ(radical(three), three) << w;
        EXPECT_EQ(normalize_units(three).poly, three) << w;
        // Aug(0, U, U) = 0.
        CommPoly at = three.substitute(0, CommPoly::constant(kLMU, 0))
                          .substitute(1, CommPoly::variable(kLMU, "U"));
        EXPECT_TRUE(at.is_zero()) << w;
        EXPECT_TRUE(check_symmetries(three).symmetric) << w;
    }
}

TEST(AugPoly, PointsVanish) {
    BraidWord b = parse_braid("1 1 1");
    CommPoly rh = augmentation_polynomial(b).candidate;
    DGA d = build_dga(b);
    for (int64_t p : {3, 5, 7}) {
        SearchOptions o;
        o.prime = p;
        for (const auto &pt : enumerate_augmentations(d, o).points)
            EXPECT_EQ(eval_mod(rh, {pt[0], pt[1], pt[2]}, p), 0);
    }
}

TEST(AugPoly, Errors) {
    EXPECT_THROW(augmentation_polynomial(parse_braid("1 1")), DomainError);
    AugPolyOptions o;
    o.max_chord_vars = 1;
    EXPECT_THROW(augmentation_polynomial(parse_braid("1 1 1"), o), ResourceLimit);
    EXPECT_EQ(parse_method("groebner"), ElimMethod::Groebner);
    EXPECT_THROW(parse_method("magic"), DomainError);
}

TEST(AugPoly, EliminationOrderByMembership) {
    AugSystem s = elimination_system(parse_braid("1 1 1"), false);
    auto order = elimination_order(s);
    ASSERT_EQ(order.size(), s.chords.size());
    auto members = [&](const std::string &x) {
        int v = s.equations[0].index_of(x), n = 0;
        for (const auto &e : s.equations)
            n += e.mentions(v);
        return n;
    };
    for (size_t k = 1; k < order.size(); ++k)
        EXPECT_GE(members(order[k - 1]), members(order[k]));
}

TEST(Symmetry, UnknotAndTrefoilMirror) {
    EXPECT_TRUE(check_symmetries(P("U - la - mu + la*mu")).symmetric);
    auto rep = check_symmetries(P(kRH), P(kLH));
    EXPECT_TRUE(rep.symmetric);
    ASSERT_TRUE(rep.mirror.has_value());
    EXPECT_TRUE(*rep.mirror);
    EXPECT_TRUE(check_symmetries(P("(la - 1)*(mu - 1)*(la*mu^3 + 1)", kLM)).symmetric);
}

TEST(Symmetry, NegativeControl) {
    EXPECT_FALSE(check_symmetries(P("la + 2*mu + 3*U^2 + 5")).symmetric);
    auto rep = check_symmetries(P(kRH), P(kRH));
    EXPECT_FALSE(*rep.mirror);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-3, 3), e(0, 3);
    int asym = 0;
    for (int t = 0; t < 20; ++t) {
        CommPoly q(kLMU);
        for (int k = 0; k < 4; ++k)
            q.add_term({e(rng), e(rng), e(rng)}, c(rng));
        if (q.size() < 2)
            continue;
        asym += !check_symmetries(q).symmetric;
    }
    EXPECT_GT(asym, 10);
}

TEST(Homfly, Specialization) {
    std::vector<std::string> aq = {"a", "q"};
    EXPECT_EQ(homfly_specialization(P("-a^-4 + a^-2*q^-2 + a^-2*q^2", aq)),
              P("-U^2 + 2*U", {"U"}));
    EXPECT_THROW(homfly_specialization(P("a + 1", aq)), DomainError);
}

TEST(Homfly, UnknotAndTrefoils) {
    std::vector<std::string> aq = {"a", "q"};
    HomflyReport u = homfly_check(P("U - la - mu + la*mu"), P("1", aq));
    EXPECT_TRUE(u.pass) << u.message;
    EXPECT_EQ(u.quotient, P("1", {"U"}));

    HomflyReport rh = homfly_check(P(kRH), P("-a^-4 + a^-2*q^-2 + a^-2*q^2", aq));
    EXPECT_TRUE(rh.pass) << rh.message;
    EXPECT_EQ(rh.f, P("-2*U + 3*U^2 - U^3", {"U"}));
    EXPECT_EQ(rh.quotient, P("2*U - U^2", {"U"}));

    // Mirroring sends a to a^-1.
    CommPoly rh_homfly = P("-a^-4 + a^-2*q^-2 + a^-2*q^2", aq);
    CommPoly lh_homfly = rh_homfly.substitute(0, P("a^-1", aq));
    HomflyReport lh = homfly_check(P(kLH), lh_homfly);
    EXPECT_TRUE(lh.pass) << lh.message;

    HomflyReport wrong = homfly_check(P(kRH), P("1", aq));
    EXPECT_FALSE(wrong.pass);
}

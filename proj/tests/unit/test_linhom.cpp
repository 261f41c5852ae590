#include "kch/linhom/linhom.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kch;

namespace {

DenseMatrix<IntegerRing> Z(std::vector<std::vector<int>> rows) {
    IntegerRing ring;
    int r = static_cast<int>(rows.size()), c = r ? static_cast<int>(rows[0].size()) : 0;
    DenseMatrix<IntegerRing> m(ring, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    return m;
}

// Bareiss determinant, independent of the SNF code.
BigInt det(DenseMatrix<IntegerRing> m) {
    int n = m.rows;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int s = k + 1;
            while (s < n && m(s, k) == 0)
                ++s;
            if (s == n)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(m(k, j), m(s, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return n ? sign * m(n - 1, n - 1) : BigInt(1);
}

// Rank over F_p by Gaussian elimination.
int rank_mod(const DenseMatrix<IntegerRing> &m, int64_t p) {
    std::vector<std::vector<int64_t>> a(m.rows, std::vector<int64_t>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            a[i][j] = mod_p(m(i, j), p);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows; ++r)
            if (a[r][c]) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[piv], a[rank]);
        int64_t inv = inv_mod(a[rank][c], p);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && a[r][c]) {
                int64_t f = a[r][c] * inv % p;
                for (int j = 0; j < m.cols; ++j)
                    a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
            }
        ++rank;
    }
    return rank;
}

Augmentation<IntegerRing> trefoil_eps() {
    Augmentation<IntegerRing> eps;
    eps.vars = {{"la", 1}, {"mu", -1}, {"U", 1}};
    eps.chords = {{Letter::a(1, 2), -2}, {Letter::a(2, 1), -2}};
    return eps;
}

Augmentation<IntegerRing> unknot_eps() {
    Augmentation<IntegerRing> eps;
    eps.vars = {{"la", 1}, {"mu", -1}, {"U", 1}};
    return eps;
}

std::vector<BigInt> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

} // namespace

TEST(SNF, SmallExamples) {
    IntegerRing ring;
    auto s = smith_normal_form(ring, DenseMatrix<IntegerRing>::identity(ring, 3));
    EXPECT_EQ(s.factors, ints({1, 1, 1}));
    s = smith_normal_form(ring, Z({{2, 4}, {6, 8}}));
    EXPECT_EQ(s.factors, ints({2, 4}));
    EXPECT_TRUE(verify_smith_form(ring, Z({{2, 4}, {6, 8}}), s));
    s = smith_normal_form(ring, Z({{0, 0, 0}, {0, 0, 0}}));
    EXPECT_TRUE(s.factors.empty());
    EXPECT_EQ(s.rank, 0);
    s = smith_normal_form(ring, DenseMatrix<IntegerRing>(ring, 0, 4));
    EXPECT_EQ(s.rank, 0);
}

TEST(SNF, RandomIntegerMatricesAreUnimodular) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9), zero(0, 3);
    IntegerRing ring;
    for (int trial = 0; trial < 200; ++trial) {
        DenseMatrix<IntegerRing> m(ring, dim(rng), dim(rng));
        for (auto &x : m.data)
            x = zero(rng) ? val(rng) : 0;
        auto s = smith_normal_form(ring, m);
        ASSERT_TRUE(verify_smith_form(ring, m, s));
        BigInt dl = det(s.left), dr = det(s.right);
        EXPECT_TRUE(dl == 1 || dl == -1);
        EXPECT_TRUE(dr == 1 || dr == -1);
        for (const auto &f : s.factors)
            EXPECT_GT(f, 0);
        for (int64_t p : {2, 3, 5}) {
            int expected = 0;
            for (const auto &f : s.factors)
                expected += f % p != 0;
            EXPECT_EQ(rank_mod(m, p), expected);
        }
    }
}

TEST(SNF, OverFieldsAndLaurent) {
    PrimeField F(3);
    DenseMatrix<PrimeField> m(F, 2, 2);
    m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 2, m(1, 1) = 1;
    auto s = smith_normal_form(F, m);
    EXPECT_EQ(s.rank, 1);
    EXPECT_TRUE(verify_smith_form(F, m, s));

    LaurentQRing L;
    DenseMatrix<LaurentQRing> t(L, 2, 2);
    t(0, 0) = parse_qlaurent("1 - t");
    t(0, 1) = parse_qlaurent("t^-1");
    t(1, 0) = parse_qlaurent("1");
    t(1, 1) = parse_qlaurent("1 + t");
    auto st = smith_normal_form(L, t);
    EXPECT_TRUE(verify_smith_form(L, t, st));
    ASSERT_EQ(st.rank, 2);
    EXPECT_EQ(st.factors[0], QLaurent(1));
    // det = 1 - t^2 - t^-1, normalized to lowest exponent 0 and leading coefficient 1.
    EXPECT_EQ(st.factors[1], parse_qlaurent("1 - t + t^3"));
}

TEST(LinHom, UnknotComplex) {
    DGA d = build_dga(parse_braid("", 1));
    auto c = linearized_complex(d, unknot_eps());
    ASSERT_EQ(c.top(), 2);
    EXPECT_EQ(c.dim(0), 0);
    EXPECT_EQ(c.boundary[2], Z({{-1, -1}, {-1, -1}}));
    auto h = homology(c);
    EXPECT_EQ(h.groups[0].free_rank, 0);
    EXPECT_EQ(h.groups[1].free_rank, 1);
    EXPECT_TRUE(h.groups[1].torsion.empty());
    EXPECT_EQ(h.groups[2].free_rank, 1);
    EXPECT_EQ(group_string(c.ring, h.groups[1]), "Z");
}

TEST(LinHom, TrefoilHomology) {
    DGA d = build_dga(parse_braid("1 1 1"));
    auto c = linearized_complex(d, trefoil_eps());
    EXPECT_EQ(c.dim(0), 2);
    EXPECT_EQ(c.dim(1), 10);
    EXPECT_EQ(c.dim(2), 8);
    IntegerRing Zr;
    EXPECT_TRUE(is_zero_matrix(Zr, mat_product(Zr, c.boundary[1], c.boundary[2])));
    auto h = homology(c);
    EXPECT_EQ(h.groups[0].free_rank, 0);
    EXPECT_EQ(h.groups[0].torsion, ints({3}));
    EXPECT_EQ(h.groups[1].free_rank, 1);
    EXPECT_EQ(h.groups[1].torsion, ints({3, 3, 3}));
    EXPECT_EQ(h.groups[2].free_rank, 1);
    EXPECT_TRUE(h.groups[2].torsion.empty());
    EXPECT_EQ(group_string(Zr, h.groups[1]), "Z + Z/(3) + Z/(3) + Z/(3)");

    // Euler characteristic.
    int chi_h = 0, chi_c = 0;
    for (int k = 0; k <= 2; ++k) {
        chi_h += (k % 2 ? -1 : 1) * h.groups[k].free_rank;
        chi_c += (k % 2 ? -1 : 1) * c.dim(k);
    }
    EXPECT_EQ(chi_h, chi_c);

    // Universal coefficients against Gaussian elimination mod p.
    for (int64_t p : {2, 3, 5}) {
        for (int k = 0; k <= 2; ++k) {
            int rk_out = k >= 1 ? rank_mod(c.boundary[k], p) : 0;
            int rk_in = k + 1 <= 2 ? rank_mod(c.boundary[k + 1], p) : 0;
            int dim_p = c.dim(k) - rk_out - rk_in;
            int expect = h.groups[k].free_rank;
            for (const auto &t : h.groups[k].torsion)
                expect += t % p == 0;
            if (k >= 1)
                for (const auto &t : h.groups[k - 1].torsion)
                    expect += t % p == 0;
            EXPECT_EQ(dim_p, expect) << "p=" << p << " k=" << k;
        }
    }
}

TEST(LinHom, NotAnAugmentation) {
    DGA d = build_dga(parse_braid("1 1 1"));
    auto eps = trefoil_eps();
    eps.chords[Letter::a(1, 2)] = 0;
    EXPECT_THROW(linearized_complex(d, eps), DomainError);
}

TEST(LinHom, StabilizationInvariance) {
    DGA d = build_dga(parse_braid("1 1 1"));
    auto base = homology(linearized_complex(d, trefoil_eps()));
    DGA s = stabilize(stabilize(d, 2), 1);
    auto eps = trefoil_eps();
    eps.chords[Letter::stab(4, 0)] = 0;
    auto c = linearized_complex(s, eps);
    auto h = homology(c);
    for (int k = 0; k <= 2; ++k) {
        EXPECT_EQ(h.groups[k].free_rank, base.groups[k].free_rank);
        EXPECT_EQ(h.groups[k].torsion, base.groups[k].torsion);
    }
}

TEST(LinHom, FieldCoefficients) {
    DGA d = build_dga(parse_braid("1 1 1"));
    Augmentation<PrimeField> eps{PrimeField(3), {{"la", 1}, {"mu", 2}, {"U", 1}},
                                 {{Letter::a(1, 2), 1}, {Letter::a(2, 1), 1}}};
    // Reduction of the integral augmentation: by universal coefficients the
    // Z/3 torsion of H_0 and H_1 adds 1, 3 + 1 and 3 to the free ranks.
    auto h = homology(linearized_complex(d, eps));
    EXPECT_EQ(h.groups[0].free_rank, 1);
    EXPECT_EQ(h.groups[1].free_rank, 5);
    EXPECT_EQ(h.groups[2].free_rank, 4);

    Augmentation<RationalField> q{RationalField(), {{"la", 1}, {"mu", -1}, {"U", 1}},
                                  {{Letter::a(1, 2), -2}, {Letter::a(2, 1), -2}}};
    auto hq = homology(linearized_complex(d, q));
    EXPECT_EQ(hq.groups[0].free_rank, 0);
    EXPECT_EQ(hq.groups[1].free_rank, 1);
    EXPECT_EQ(hq.groups[2].free_rank, 1);
}

TEST(LinHom, LaurentCoefficients) {
    DGA d = build_dga(parse_braid("", 1));
    LaurentQRing L;
    Augmentation<LaurentQRing> eps{L, {{"la", QLaurent(1)}, {"mu", QLaurent::monomial(1, 1)},
                                       {"U", QLaurent(1)}},
                                   {}};
    auto c = linearized_complex(d, eps);
    auto h = homology(c);
    EXPECT_EQ(h.groups[1].free_rank, 1);
    EXPECT_TRUE(h.groups[1].torsion.empty());
    EXPECT_EQ(h.groups[2].free_rank, 1);
}

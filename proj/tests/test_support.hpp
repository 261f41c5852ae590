#pragma once

#include "kch/ncalg/ncpoly.hpp"

#include <random>
#include <vector>

namespace kch::testing {

// Random polynomial over `ring` in chord letters on `n` strands (plus
// homology letters in fully noncommutative mode). Words have length <= max_len.
inline NCPoly random_poly(std::mt19937 &rng, const RingPtr &ring, int n, int max_terms,
                          int max_len, bool homogeneous_degree0 = false) {
    std::uniform_int_distribution<int> nterms(0, max_terms), len(0, max_len),
        idx(1, n), coef(-3, 3), kind(0, homogeneous_degree0 ? 0 : 5), hom(0, 3),
        var(0, static_cast<int>(ring->vars.size()) - 1), expo(-2, 2);
    NCPolyBuilder b(ring);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Word w;
        int l = len(rng);
        for (int m = 0; m < l; ++m) {
            if (ring->mode == AlgebraMode::FullyNoncommutative && hom(rng) == 0) {
                int e = expo(rng);
                if (e == 0)
                    e = 1;
                LetterKind hk = hom(rng) < 2 ? LetterKind::Mu : LetterKind::Lambda;
                append_letter(w, Letter::homology(hk, 1 + idx(rng) % 2, e), ring->mode);
                continue;
            }
            int i = idx(rng), j = idx(rng);
            auto lk = static_cast<LetterKind>(kind(rng));
            if (lk == LetterKind::A || lk == LetterKind::B) {
                if (i == j)
                    j = i % n + 1;
                if (i == j)
                    continue;
            }
            w.push_back(Letter::chord(lk, i, j));
        }
        Laurent c(coef(rng));
        if (!ring->vars.empty() && coef(rng) > 0)
            c *= Laurent::variable(var(rng), expo(rng));
        b.add(w, c);
    }
    return std::move(b).build();
}

inline RingPtr knot_ring() { return make_ring({"la", "mu", "U"}); }

} // namespace kch::testing

#include "kch/dga/dga.hpp"
#include "kch/ncalg/eval.hpp"

namespace kch::testing {

// Exhaustive count of F_p augmentations, evaluating every degree-1
// differential directly on each point of the full grid.
inline uint64_t brute_force_count(const DGA &d, int64_t p) {
    PrimeField F(p);
    std::vector<std::string> units = d.ring->vars;
    std::vector<Letter> chords = d.generators_of_degree(0);
    std::vector<Letter> ones = d.generators_of_degree(1);
    size_t n = units.size() + chords.size();
    std::vector<int64_t> val(n, 0);
    for (size_t i = 0; i < units.size(); ++i)
        val[i] = 1;
    uint64_t count = 0;
    while (true) {
        Assignment<PrimeField> a{F, {}, {}};
        for (size_t i = 0; i < units.size(); ++i)
            a.vars[units[i]] = val[i];
        for (size_t i = 0; i < chords.size(); ++i)
            a.chords[chords[i]] = val[units.size() + i];
        bool ok = true;
        for (const Letter &g : ones)
            if (nc_eval(d.d(g), a) != 0) {
                ok = false;
                break;
            }
        count += ok;
        size_t k = 0;
        for (; k < n; ++k) {
            bool unit = k < units.size();
            if (++val[k] < p)
                break;
            val[k] = unit ? 1 : 0;
        }
        if (k == n)
            break;
    }
    return count;
}

} // namespace kch::testing

#include "kch/braid/phi.hpp"
#include "kch/ncalg/ncmatrix.hpp"

namespace kch::testing {

inline BraidWord random_braid(std::mt19937 &rng, int n, int len) {
    std::uniform_int_distribution<int> k(1, n - 1), s(0, 1);
    std::vector<BraidLetter> ls;
    for (int i = 0; i < len; ++i)
        ls.push_back({k(rng), s(rng) ? 1 : -1});
    return BraidWord(n, ls);
}

// Matrix of chords with the meridian conventions of the DGA: a_ij above the
// diagonal, -mu a_ij (right factor mu_alpha(j) when noncommutative) below,
// 1 - mu on the diagonal.
inline NCMatrix chord_matrix(const RingPtr &r, const BraidWord &b, bool phi_applied) {
    int n = b.strands();
    ComponentMap cm = components(b);
    auto images = projected_chord_images(b, r, -1);
    NCMatrix m(r, n, n);
    auto mer = [&](int strand) {
        int a = cm.alpha[strand];
        if (r->mode == AlgebraMode::FullyNoncommutative)
            return NCPoly::letter(r, Letter::homology(LetterKind::Mu, a, 1));
        return NCPoly::constant(r, Laurent::variable(r->index_of(meridian_name(a, cm.r))));
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            NCPoly a = i == j ? NCPoly(r)
                              : (phi_applied ? images.at(Letter::a(i, j))
                                             : NCPoly::letter(r, Letter::a(i, j)));
            if (i < j)
                m.at(i - 1, j - 1) = a;
            else if (i > j)
                m.at(i - 1, j - 1) = -(a * mer(j));
            else
                m.at(i - 1, j - 1) = NCPoly::constant(r, 1) - mer(i);
        }
    return m;
}

inline RingPtr commuted_ring_for(const BraidWord &b) {
    int r = components(b).r;
    std::vector<std::string> v;
    for (int a = 1; a <= r; ++a)
        v.push_back(longitude_name(a, r));
    for (int a = 1; a <= r; ++a)
        v.push_back(meridian_name(a, r));
    v.push_back("U");
    return make_ring(v);
}

} // namespace kch::testing

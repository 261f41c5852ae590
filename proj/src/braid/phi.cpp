#include "kch/braid/phi.hpp"
#include "kch/errors.hpp"

namespace kch {

namespace {

NCPoly chord(const RingPtr &r, int i, int j) { return NCPoly::letter(r, Letter::a(i, j)); }

NCPoly mutilde(const RingPtr &r, int i, int e) {
    return NCPoly::letter(r, Letter::homology(LetterKind::MuTilde, i, e));
}

} // namespace

std::optional<NCPoly> phi_sigma_letter(int k, int sign, const Letter &l, const RingPtr &r) {
    const bool dec = r->mode == AlgebraMode::FullyNoncommutative;
    const int K = k, K1 = k + 1;
    if (l.kind == LetterKind::MuTilde) {
        if (l.i == K)
            return mutilde(r, K1, l.exp);
        if (l.i == K1)
            return mutilde(r, K, l.exp);
        return std::nullopt;
    }
    if (l.kind != LetterKind::A)
        return std::nullopt;
    const int i = l.i, j = l.j;
    auto A = [&](int x, int y) { return chord(r, x, y); };
    auto M = [&](int x, int e) { return mutilde(r, x, e); };
    if (sign > 0) {
        if (i == K && j == K1)
            return -A(K1, K);
        if (i == K1 && j == K)
            return dec ? -(M(K, 1) * A(K, K1) * M(K1, -1)) : -A(K, K1);
        if (i == K1)
            return A(K, j);
        if (j == K1)
            return A(i, K);
        if (i == K)
            return A(K1, j) - A(K1, K) * A(K, j);
        if (j == K) {
            if (!dec || i < K)
                return A(i, K1) - A(i, K) * A(K, K1);
            return A(i, K1) - A(i, K) * M(K, 1) * A(K, K1) * M(K1, -1);
        }
        return std::nullopt;
    }
    if (i == K1 && j == K)
        return -A(K, K1);
    if (i == K && j == K1)
        return dec ? -(M(K1, -1) * A(K1, K) * M(K, 1)) : -A(K1, K);
    if (i == K)
        return A(K1, j);
    if (j == K)
        return A(i, K1);
    if (i == K1)
        return A(K, j) - A(K, K1) * A(K1, j);
    if (j == K1) {
        if (dec && i < K)
            return A(i, K) - A(i, K1) * M(K1, -1) * A(K1, K) * M(K, 1);
        return A(i, K) - A(i, K1) * A(K1, K);
    }
    return std::nullopt;
}

NCPoly phi_apply(const BraidWord &b, const NCPoly &p, int width) {
    if (b.strands() > width)
        throw DomainError("braid on " + std::to_string(b.strands()) +
                          " strands does not fit in width " + std::to_string(width));
    for (const auto &[w, c] : p.terms())
        for (const Letter &l : w)
            if ((is_chord(l) && (l.i > width || l.j > width)) ||
                (l.kind == LetterKind::MuTilde && l.i > width))
                throw DomainError("letter " + letter_name(l) + " outside width " +
                                  std::to_string(width));
    return phi_apply(b, p);
}

NCPoly phi_apply(const BraidWord &b, const NCPoly &p) {
    NCPoly cur = p;
    const RingPtr &r = p.ring();
    std::map<std::pair<int, int>, std::map<Letter, std::optional<NCPoly>>> cache;
    for (const BraidLetter &bl : b.letters()) {
        auto &c = cache[{bl.k, bl.sign}];
        LetterMap m = [&](const Letter &l) -> std::optional<NCPoly> {
            auto it = c.find(l);
            if (it != c.end())
                return it->second;
            auto img = phi_sigma_letter(bl.k, bl.sign, l, r);
            c.emplace(l, img);
            return img;
        };
        cur = substitute(cur, m);
    }
    return cur;
}

std::map<Letter, NCPoly> phi_chord_images(const BraidWord &b, const RingPtr &ring, int star) {
    int n = b.strands();
    std::vector<int> idx;
    for (int i = 1; i <= n; ++i)
        idx.push_back(i);
    if (star >= 0)
        idx.push_back(star);
    std::map<Letter, NCPoly> out;
    for (int i : idx)
        for (int j : idx)
            if (i != j)
                out.emplace(Letter::a(i, j), phi_apply(b, chord(ring, i, j)));
    return out;
}

std::string meridian_name(int alpha, int components) {
    return components == 1 ? "mu" : "mu" + std::to_string(alpha);
}

std::string longitude_name(int alpha, int components) {
    return components == 1 ? "la" : "la" + std::to_string(alpha);
}

std::map<Letter, NCPoly> projected_chord_images(const BraidWord &b, const RingPtr &ring,
                                                int star) {
    ComponentMap cm = components(b);
    if (ring->mode == AlgebraMode::Commuted && cm.r == 1)
        return phi_chord_images(b, ring, star);
    RingPtr aux = make_ring({}, AlgebraMode::FullyNoncommutative);
    std::map<Letter, NCPoly> dec = phi_chord_images(b, aux, star);
    std::vector<std::optional<NCPoly>> meridian(cm.r + 1);
    for (int a = 1; a <= cm.r; ++a) {
        if (ring->mode == AlgebraMode::FullyNoncommutative) {
            meridian[a] = NCPoly::letter(ring, Letter::homology(LetterKind::Mu, a, 1));
        } else {
            int v = ring->index_of(meridian_name(a, cm.r));
            if (v < 0)
                throw ConfigError("ring lacks meridian variable " + meridian_name(a, cm.r));
            meridian[a] = NCPoly::constant(ring, Laurent::variable(v));
        }
    }
    LetterMap project = [&](const Letter &l) -> std::optional<NCPoly> {
        if (l.kind != LetterKind::MuTilde)
            return std::nullopt;
        if (l.i < 1 || l.i > b.strands())
            throw InternalError("meridian letter on the extra strand");
        const NCPoly &m = *meridian[cm.alpha[l.i]];
        if (l.exp == 1)
            return m;
        if (ring->mode == AlgebraMode::FullyNoncommutative)
            return NCPoly::letter(ring, Letter::homology(LetterKind::Mu, cm.alpha[l.i], l.exp));
        return NCPoly::constant(ring, m.terms()[0].second.pow(l.exp));
    };
    std::map<Letter, NCPoly> out;
    for (const auto &[l, img] : dec)
        out.emplace(l, substitute(img, project, ring));
    return out;
}

namespace {

bool touches(const Word &w, int s) {
    for (const Letter &l : w)
        if (is_chord(l) && (l.i == s || l.j == s))
            return true;
    return false;
}

} // namespace

PhiMatrices phi_matrices(const BraidWord &b, StarStrand star, const RingPtr &ring) {
    int n = b.strands();
    ComponentMap cm = components(b);
    if ((cm.r > 1 || ring->mode == AlgebraMode::FullyNoncommutative) && star != StarStrand::Low0)
        throw DomainError("links and fully noncommutative algebras require the extra strand "
                          "to be strand 0");
    int s = star == StarStrand::Low0 ? 0 : n + 1;
    auto images = projected_chord_images(b, ring, s);
    PhiMatrices out{NCMatrix(ring, n, n), NCMatrix(ring, n, n)};
    auto fail = [](const NCPoly &p) {
        throw InternalError("image is not one-sided linear in the extra strand: " + p.to_string());
    };
    for (int i = 1; i <= n; ++i) {
        std::vector<NCPolyBuilder> left(n, NCPolyBuilder(ring)), right(n, NCPolyBuilder(ring));
        const NCPoly &li = images.at(Letter::a(i, s));
        for (const auto &[w, c] : li.terms()) {
            if (w.empty() || w.back().kind != LetterKind::A || w.back().j != s || w.back().i == s)
                fail(li);
            Word prefix(w.begin(), w.end() - 1);
            if (touches(prefix, s))
                fail(li);
            left[w.back().i - 1].add(std::move(prefix), c);
        }
        const NCPoly &ri = images.at(Letter::a(s, i));
        for (const auto &[w, c] : ri.terms()) {
            if (w.empty() || w.front().kind != LetterKind::A || w.front().i != s || w.front().j == s)
                fail(ri);
            Word suffix(w.begin() + 1, w.end());
            if (touches(suffix, s))
                fail(ri);
            right[w.front().j - 1].add(std::move(suffix), c);
        }
        for (int j = 1; j <= n; ++j) {
            out.left.at(i - 1, j - 1) = std::move(left[j - 1]).build();
            // phi(a_{*i}) = sum_j a_{*j} (Phi^R)_{ji}
            out.right.at(j - 1, i - 1) = std::move(right[j - 1]).build();
        }
    }
    return out;
}

} // namespace kch

#include "kch/braid/braid.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace kch {

BraidWord::BraidWord(int n, std::vector<BraidLetter> letters)
    : n_(n), letters_(std::move(letters)) {
    if (n < 1)
        throw DomainError("braid needs at least one strand");
    for (const auto &l : letters_) {
        if (l.k < 1 || l.k >= n)
            throw DomainError("braid generator index " + std::to_string(l.k) +
                              " out of range for " + std::to_string(n) + " strands");
        if (l.sign != 1 && l.sign != -1)
            throw DomainError("braid generator sign must be +1 or -1");
    }
}

int BraidWord::writhe() const {
    int w = 0;
    for (const auto &l : letters_)
        w += l.sign;
    return w;
}

std::vector<int> BraidWord::permutation() const {
    // at[p] = starting strand currently at position p
    std::vector<int> at(n_ + 1);
    std::iota(at.begin(), at.end(), 0);
    for (const auto &l : letters_)
        std::swap(at[l.k], at[l.k + 1]);
    std::vector<int> perm(n_ + 1, 0);
    for (int p = 1; p <= n_; ++p)
        perm[at[p]] = p;
    return perm;
}

BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> inv(letters_.rbegin(), letters_.rend());
    for (auto &l : inv)
        l.sign = -l.sign;
    return BraidWord(n_, std::move(inv));
}

BraidWord BraidWord::operator*(const BraidWord &o) const {
    std::vector<BraidLetter> all = letters_;
    all.insert(all.end(), o.letters_.begin(), o.letters_.end());
    return BraidWord(std::max(n_, o.n_), std::move(all));
}

BraidWord BraidWord::stabilized(int sign) const {
    std::vector<BraidLetter> all = letters_;
    all.push_back({n_, sign});
    return BraidWord(n_ + 1, std::move(all));
}

std::string BraidWord::to_string() const {
    std::string s;
    for (const auto &l : letters_) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(l.sign * l.k);
    }
    return s;
}

BraidWord parse_braid(std::string_view text, std::optional<int> n) {
    std::string buf(text);
    for (char &c : buf)
        if (c == ',')
            c = ' ';
    std::istringstream in(buf);
    std::vector<BraidLetter> letters;
    std::string tok;
    int max_index = 0;
    while (in >> tok) {
        auto bad = [&] { return DomainError("malformed braid token '" + tok + "'"); };
        if (tok[0] == 's' || tok[0] == 'S') {
            size_t pos = 1;
            size_t start = pos;
            while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
                ++pos;
            if (start == pos)
                throw bad();
            int k = std::stoi(tok.substr(start, pos - start));
            int power = 1;
            if (pos < tok.size()) {
                if (tok[pos] != '^')
                    throw bad();
                ++pos;
                bool neg = pos < tok.size() && tok[pos] == '-';
                if (neg)
                    ++pos;
                size_t es = pos;
                while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
                    ++pos;
                if (es == pos || pos != tok.size())
                    throw bad();
                power = std::stoi(tok.substr(es, pos - es));
                if (neg)
                    power = -power;
            }
            if (k == 0)
                throw DomainError("braid generator index 0 is not allowed");
            max_index = std::max(max_index, k);
            for (int r = 0; r < std::abs(power); ++r)
                letters.push_back({k, power > 0 ? 1 : -1});
            continue;
        }
        size_t pos = 0;
        bool neg = false;
        if (tok[0] == '-' || tok[0] == '+') {
            neg = tok[0] == '-';
            pos = 1;
        }
        if (pos == tok.size() || tok.size() - pos > 6)
            throw bad();
        for (size_t q = pos; q < tok.size(); ++q)
            if (!std::isdigit(static_cast<unsigned char>(tok[q])))
                throw bad();
        int k = std::stoi(tok.substr(pos));
        if (k == 0)
            throw DomainError("braid generator index 0 is not allowed");
        max_index = std::max(max_index, k);
        letters.push_back({k, neg ? -1 : 1});
    }
    int strands = n.value_or(max_index + 1);
    if (max_index >= strands)
        throw DomainError("braid generator index " + std::to_string(max_index) +
                          " requires more than " + std::to_string(strands) + " strands");
    return BraidWord(strands, std::move(letters));
}

ComponentMap components(const BraidWord &b) {
    int n = b.strands();
    std::vector<int> perm = b.permutation();
    ComponentMap cm;
    cm.alpha.assign(n + 1, 0);
    cm.strand_count.push_back(0);
    cm.writhe.push_back(0);
    cm.leading.push_back(0);
    for (int s = 1; s <= n; ++s) {
        if (cm.alpha[s] != 0)
            continue;
        ++cm.r;
        int count = 0;
        for (int t = s; cm.alpha[t] == 0; t = perm[t]) {
            cm.alpha[t] = cm.r;
            ++count;
        }
        cm.strand_count.push_back(count);
        cm.writhe.push_back(0);
        cm.leading.push_back(s);
    }
    std::vector<int> at(n + 1);
    std::iota(at.begin(), at.end(), 0);
    for (const auto &l : b.letters()) {
        int x = at[l.k], y = at[l.k + 1];
        if (cm.alpha[x] == cm.alpha[y])
            cm.writhe[cm.alpha[x]] += l.sign;
        std::swap(at[l.k], at[l.k + 1]);
    }
    for (int a = 1; a <= cm.r; ++a)
        if ((cm.writhe[a] - cm.strand_count[a] + 1) % 2 != 0)
            throw InternalError("component writhe parity violated");
    return cm;
}

BraidWord sub_braid(const BraidWord &b, const std::vector<int> &keep) {
    int n = b.strands();
    std::vector<bool> kept(n + 1, false);
    for (int s : keep) {
        if (s < 1 || s > n)
            throw DomainError("strand " + std::to_string(s) + " out of range");
        kept[s] = true;
    }
    int m = static_cast<int>(std::count(kept.begin(), kept.end(), true));
    if (m == 0)
        throw DomainError("sub-braid must keep at least one strand");
    std::vector<int> at(n + 1);
    std::iota(at.begin(), at.end(), 0);
    std::vector<BraidLetter> out;
    for (const auto &l : b.letters()) {
        int x = at[l.k], y = at[l.k + 1];
        if (kept[x] && kept[y]) {
            int rank = 0;
            for (int p = 1; p < l.k; ++p)
                if (kept[at[p]])
                    ++rank;
            out.push_back({rank + 1, l.sign});
        }
        std::swap(at[l.k], at[l.k + 1]);
    }
    return BraidWord(m, std::move(out));
}

int self_linking(const BraidWord &b) {
    if (components(b).r != 1)
        throw DomainError("self-linking number requires a knot closure");
    return b.writhe() - b.strands();
}

QLaurent alexander_polynomial(const BraidWord &b) {
    const int n = b.strands();
    if (n == 1)
        return QLaurent(1);
    const QLaurent t = QLaurent::monomial(1, 1), ti = QLaurent::monomial(1, -1);
    using Mat = std::vector<std::vector<QLaurent>>;
    Mat m(n, std::vector<QLaurent>(n, QLaurent(0)));
    for (int i = 0; i < n; ++i)
        m[i][i] = QLaurent(1);
    // Right-multiply by the Burau block of each letter.
    for (const BraidLetter &l : b.letters()) {
        int i = l.k - 1;
        QLaurent a, c, d, e; // block [[a, c], [d, e]]
        if (l.sign > 0) {
            a = QLaurent(1) - t;
            c = t;
            d = QLaurent(1);
            e = QLaurent(0);
        } else {
            a = QLaurent(0);
            c = QLaurent(1);
            d = ti;
            e = QLaurent(1) - ti;
        }
        for (int r = 0; r < n; ++r) {
            QLaurent x = m[r][i], y = m[r][i + 1];
            m[r][i] = x * a + y * d;
            m[r][i + 1] = x * c + y * e;
        }
    }
    // det of (I - B) with the last row and column removed, by Bareiss.
    const int k = n - 1;
    Mat a(k, std::vector<QLaurent>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a[i][j] = (i == j ? QLaurent(1) : QLaurent(0)) - m[i][j];
    QLaurent prev(1);
    for (int p = 0; p < k; ++p) {
        int piv = p;
        while (piv < k && a[piv][p].is_zero())
            ++piv;
        if (piv == k)
            return QLaurent(0);
        std::swap(a[piv], a[p]);
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j) {
                QLaurent q, r;
                QLaurent::divmod(a[p][p] * a[i][j] - a[i][p] * a[p][j], prev, q, r);
                if (!r.is_zero())
                    throw InternalError("inexact Bareiss step in alexander_polynomial");
                a[i][j] = q;
            }
        prev = a[p][p];
    }
    QLaurent det = a[k - 1][k - 1];
    if (det.is_zero())
        return det;
    det = det.shifted(-det.low());
    if (det.coeff(0) < 0)
        det = -det;
    return det;
}

} // namespace kch

#include "kch/augpoly/polyalg.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <climits>

namespace kch {

namespace {

Exps neg(Exps e) {
    for (int &x : e)
        x = -x;
    return e;
}

// Lex division; both inputs have nonnegative exponents.
std::optional<CommPoly> divide_nonneg(const CommPoly &f, const CommPoly &g) {
    if (g.is_zero())
        throw DomainError("division by the zero polynomial");
    CommPoly q(f.vars()), r = f;
    const auto &[eg, cg] = g.leading();
    while (!r.is_zero()) {
        const auto &[er, cr] = r.leading();
        Exps d(er.size());
        for (size_t i = 0; i < d.size(); ++i) {
            d[i] = er[i] - eg[i];
            if (d[i] < 0)
                return std::nullopt;
        }
        if (cr % cg != 0)
            return std::nullopt;
        CommPoly t = CommPoly::monomial(f.vars(), d, cr / cg);
        q += t;
        r -= t * g;
    }
    return q;
}

bool nonneg(const CommPoly &f) {
    Exps m = f.min_exponents();
    return std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
}

CommPoly positive_lead(CommPoly f) {
    if (!f.is_zero() && f.leading().second < 0)
        return -f;
    return f;
}

int first_mentioned(const CommPoly &f, const CommPoly &g) {
    for (int v = 0; v < f.nvars(); ++v)
        if (f.mentions(v) || g.mentions(v))
            return v;
    return -1;
}

CommPoly prem(const CommPoly &a, const CommPoly &b, int v) {
    int db = b.degree(v);
    CommPoly lb = b.coeffs_in(v).back();
    CommPoly r = a;
    while (!r.is_zero() && r.degree(v) >= db) {
        int dr = r.degree(v);
        CommPoly lr = r.coeffs_in(v).back();
        Exps shift(a.nvars(), 0);
        shift[v] = dr - db;
        r = lb * r - (lr * b).shifted(shift);
    }
    return r;
}

} // namespace

std::optional<CommPoly> exact_divide(const CommPoly &f, const CommPoly &g) {
    if (g.is_zero())
        throw DomainError("division by the zero polynomial");
    if (f.is_zero())
        return CommPoly(f.vars());
    Exps mf = f.min_exponents(), mg = g.min_exponents();
    auto q = divide_nonneg(f.shifted(neg(mf)), g.shifted(neg(mg)));
    if (!q)
        return std::nullopt;
    Exps d(mf.size());
    for (size_t i = 0; i < d.size(); ++i)
        d[i] = mf[i] - mg[i];
    return q->shifted(d);
}

namespace {

template <class Gcd> CommPoly content_with(const CommPoly &f, int v, Gcd gcd) {
    CommPoly g(f.vars());
    for (const CommPoly &c : f.coeffs_in(v)) {
        if (c.is_zero())
            continue;
        g = g.is_zero() ? positive_lead(c) : gcd(g, c);
        if (g.is_constant() && g.content() == 1)
            break;
    }
    return g;
}

} // namespace

CommPoly content_in(const CommPoly &f, int v) { return content_with(f, v, poly_gcd); }

CommPoly poly_gcd_prs(const CommPoly &f, const CommPoly &g) {
    if (!nonneg(f) || !nonneg(g))
        throw DomainError("gcd needs nonnegative exponents");
    if (f.is_zero())
        return positive_lead(g);
    if (g.is_zero())
        return positive_lead(f);
    if (f.is_constant() || g.is_constant())
        return CommPoly::constant(f.vars(), big_gcd(f.content(), g.content()));
    auto content = [](const CommPoly &x, int v) { return content_with(x, v, poly_gcd_prs); };
    int v = first_mentioned(f, g);
    if (!f.mentions(v))
        return poly_gcd_prs(f, content(g, v));
    if (!g.mentions(v))
        return poly_gcd_prs(content(f, v), g);
    CommPoly cf = content(f, v), cg = content(g, v);
    CommPoly c = poly_gcd_prs(cf, cg);
    CommPoly a = *exact_divide(f, cf), b = *exact_divide(g, cg);
    if (a.degree(v) < b.degree(v))
        std::swap(a, b);
    while (!b.is_zero() && b.degree(v) > 0) {
        CommPoly r = prem(a, b, v);
        a = std::move(b);
        b = r.is_zero() ? r : *exact_divide(r, content(r, v));
    }
    CommPoly g0 = b.is_zero() ? *exact_divide(a, content(a, v)) : CommPoly::constant(f.vars(), 1);
    return positive_lead(c * g0);
}

CommPoly resultant(const CommPoly &f, const CommPoly &g, int v) {
    int m = f.is_zero() ? 0 : f.degree(v), n = g.is_zero() ? 0 : g.degree(v);
    if (m <= 0 || n <= 0)
        throw DomainError("resultant needs positive degree in " + f.vars()[v]);
    auto cf = f.coeffs_in(v), cg = g.coeffs_in(v);
    int size = m + n;
    std::vector<std::vector<CommPoly>> M(size, std::vector<CommPoly>(size, CommPoly(f.vars())));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            M[r][r + k] = cf[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            M[n + r][r + k] = cg[n - k];
    // Bareiss fraction-free elimination.
    CommPoly prev = CommPoly::constant(f.vars(), 1);
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k].is_zero()) {
            int s = k + 1;
            while (s < size && M[s][k].is_zero())
                ++s;
            if (s == size)
                return CommPoly(f.vars());
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j) {
                CommPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto q = exact_divide(num, prev);
                if (!q)
                    throw InternalError("inexact Bareiss step in resultant");
                M[i][j] = std::move(*q);
            }
        prev = M[k][k];
    }
    CommPoly det = M[size - 1][size - 1];
    return sign > 0 ? det : -det;
}

CommPoly radical(const CommPoly &f) {
    if (f.is_zero() || f.is_constant())
        return f;
    int v = first_mentioned(f, f);
    CommPoly c = content_in(f, v);
    CommPoly q = *exact_divide(f, c);
    CommPoly g = poly_gcd(q, q.derivative(v));
    CommPoly qr = *exact_divide(q, g);
    return radical(c) * qr;
}

UnitNormalized normalize_units(const CommPoly &f) {
    if (f.is_zero())
        return {f, Exps(f.nvars(), 0), 1};
    Exps shift = neg(f.min_exponents());
    CommPoly p = f.shifted(shift);
    BigInt c = p.content();
    if (p.leading().second < 0)
        c = -c;
    return {p.divided_by(c), shift, c};
}

bool equal_up_to_units(const CommPoly &f, const CommPoly &g) {
    return normalize_units(f).poly == normalize_units(g.with_vars(f.vars())).poly;
}

int64_t eval_mod(const CommPoly &f, const std::vector<int64_t> &values, int64_t p) {
    int64_t total = 0;
    for (const auto &[e, c] : f.terms()) {
        int64_t t = mod_p(c, p);
        for (size_t i = 0; i < e.size() && t; ++i) {
            if (e[i] == 0)
                continue;
            int64_t x = ((values[i] % p) + p) % p;
            if (e[i] < 0) {
                if (x == 0)
                    throw DomainError("zero value for inverted variable " + f.vars()[i]);
                x = inv_mod(x, p);
            }
            t = t * pow_mod(x, std::abs(e[i]), p) % p;
        }
        total = (total + t) % p;
    }
    return total;
}

} // namespace kch

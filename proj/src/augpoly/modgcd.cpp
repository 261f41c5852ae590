#include "kch/augpoly/polyalg.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <set>

namespace kch {

namespace {

// Dense univariate polynomial over F_p, lowest degree first, no trailing zeros.
using Uni = std::vector<int64_t>;
// Sparse multivariate polynomial over F_p with coefficients in [1, p).
using MP = std::map<Exps, int64_t>;

class Fp {
  public:
    explicit Fp(int64_t p) : p(p) {}
    int64_t p;

    int64_t mul(int64_t a, int64_t b) const { return static_cast<int64_t>((__int128)a * b % p); }
    int64_t add(int64_t a, int64_t b) const { return (a + b) % p; }
    int64_t sub(int64_t a, int64_t b) const { return (a - b + p) % p; }
    int64_t inv(int64_t a) const {
        int64_t r = 1, b = a, e = p - 2;
        while (e > 0) {
            if (e & 1)
                r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    static void trim(Uni &a) {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    static int deg(const Uni &a) { return static_cast<int>(a.size()) - 1; }

    int64_t eval(const Uni &a, int64_t x) const {
        int64_t r = 0;
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            r = add(mul(r, x), *it);
        return r;
    }

    Uni mul(const Uni &a, const Uni &b) const {
        if (a.empty() || b.empty())
            return {};
        Uni r(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j)
                r[i + j] = add(r[i + j], mul(a[i], b[j]));
        trim(r);
        return r;
    }

    // a = q b + r
    void divmod(Uni a, const Uni &b, Uni &q, Uni &r) const {
        q.assign(std::max(0, deg(a) - deg(b) + 1), 0);
        int64_t lb = inv(b.back());
        while (!a.empty() && deg(a) >= deg(b)) {
            int shift = deg(a) - deg(b);
            int64_t c = mul(a.back(), lb);
            q[shift] = c;
            for (size_t i = 0; i < b.size(); ++i)
                a[i + shift] = sub(a[i + shift], mul(c, b[i]));
            trim(a);
        }
        r = std::move(a);
    }

    Uni monic(Uni a) const {
        if (a.empty())
            return a;
        int64_t l = inv(a.back());
        for (auto &x : a)
            x = mul(x, l);
        return a;
    }

    Uni gcd(Uni a, Uni b) const {
        while (!b.empty()) {
            Uni q, r;
            divmod(std::move(a), b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(std::move(a));
    }

    Uni exact_div(const Uni &a, const Uni &b) const {
        Uni q, r;
        divmod(a, b, q, r);
        if (!r.empty())
            throw InternalError("modular gcd: inexact univariate division");
        trim(q);
        return q;
    }

    // --- multivariate ---

    void put(MP &m, const Exps &e, int64_t c) const {
        if (c == 0)
            return;
        auto [it, fresh] = m.emplace(e, c);
        if (!fresh) {
            it->second = add(it->second, c);
            if (it->second == 0)
                m.erase(it);
        }
    }

    // Coefficients in Z_p[x_v], keyed by the exponents with x_v removed.
    std::map<Exps, Uni> group(const MP &a, int v) const {
        std::map<Exps, Uni> out;
        for (const auto &[e, c] : a) {
            Exps k = e;
            int d = k[v];
            k[v] = 0;
            Uni &u = out[k];
            if (static_cast<int>(u.size()) <= d)
                u.resize(d + 1, 0);
            u[d] = c;
        }
        return out;
    }

    MP ungroup(const std::map<Exps, Uni> &g, int v) const {
        MP out;
        for (const auto &[k, u] : g)
            for (size_t d = 0; d < u.size(); ++d)
                if (u[d]) {
                    Exps e = k;
                    e[v] = static_cast<int>(d);
                    out.emplace(std::move(e), u[d]);
                }
        return out;
    }

    MP times_uni(const MP &a, const Uni &u, int v) const {
        auto g = group(a, v);
        for (auto &[k, c] : g)
            c = mul(c, u);
        return ungroup(g, v);
    }

    MP eval(const MP &a, int v, int64_t x) const {
        MP out;
        for (const auto &[e, c] : a) {
            Exps k = e;
            int64_t w = mul(c, power(x, k[v]));
            k[v] = 0;
            put(out, k, w);
        }
        return out;
    }

    int64_t power(int64_t x, int e) const {
        int64_t r = 1;
        for (int i = 0; i < e; ++i)
            r = mul(r, x);
        return r;
    }

    MP scaled(const MP &a, int64_t c) const {
        MP out;
        for (const auto &[e, x] : a)
            out.emplace(e, mul(x, c));
        return out;
    }

    MP monic(const MP &a) const { return a.empty() ? a : scaled(a, inv(a.rbegin()->second)); }

    MP minus(const MP &a, const MP &b) const {
        MP out = a;
        for (const auto &[e, c] : b)
            put(out, e, p - c);
        return out;
    }

    // Exact lex division; false when b does not divide a.
    bool divides(const MP &b, MP a) const {
        const auto &[eb, cb] = *b.rbegin();
        int64_t ib = inv(cb);
        while (!a.empty()) {
            const auto [ea, ca] = *a.rbegin();
            Exps d(ea.size());
            for (size_t i = 0; i < d.size(); ++i) {
                d[i] = ea[i] - eb[i];
                if (d[i] < 0)
                    return false;
            }
            int64_t c = mul(ca, ib);
            for (const auto &[e, x] : b) {
                Exps s = e;
                for (size_t i = 0; i < s.size(); ++i)
                    s[i] += d[i];
                put(a, s, p - mul(c, x));
            }
        }
        return true;
    }

    // Monic gcd in the variables 0..k-1 (Brown's dense interpolation).
    MP gcd(const MP &A, const MP &B, int k) const {
        if (A.empty())
            return monic(B);
        if (B.empty())
            return monic(A);
        int v = k - 1;
        if (k == 1) {
            auto ga = group(A, 0), gb = group(B, 0);
            return ungroup({{ga.begin()->first, gcd(ga.begin()->second, gb.begin()->second)}}, 0);
        }
        auto ga = group(A, v), gb = group(B, v);
        Uni ca, cb;
        for (const auto &[e, u] : ga)
            ca = gcd(ca, u);
        for (const auto &[e, u] : gb)
            cb = gcd(cb, u);
        Uni c = gcd(ca, cb);
        for (auto &[e, u] : ga)
            u = exact_div(u, ca);
        for (auto &[e, u] : gb)
            u = exact_div(u, cb);
        MP a = ungroup(ga, v), b = ungroup(gb, v);
        const Uni &la = ga.rbegin()->second, &lb = gb.rbegin()->second;
        Uni g = gcd(la, lb);
        Exps zero(A.begin()->first.size(), 0);

        MP C;
        Uni q = {1};
        Exps cdeg;
        for (int64_t x = 1; x < p; ++x) {
            if (eval(la, x) == 0 || eval(lb, x) == 0)
                continue;
            MP cx = gcd(eval(a, v, x), eval(b, v, x), k - 1);
            if (cx.size() == 1 && cx.begin()->first == zero)
                return ungroup({{zero, c}}, v);
            cx = scaled(cx, eval(g, x));
            const Exps &d = cx.rbegin()->first;
            if (C.empty() || d < cdeg) {
                C = cx;
                cdeg = d;
                q = {p - x, 1};
                continue;
            }
            if (cdeg < d)
                continue;
            MP diff = minus(cx, eval(C, v, x));
            if (!diff.empty())
                C = ungroup_add(C, times_uni(diff, scale(q, inv(eval(q, x))), v));
            q = mul(q, Uni{p - x, 1});
            if (diff.empty()) {
                auto gc = group(C, v);
                Uni cc;
                for (const auto &[e, u] : gc)
                    cc = gcd(cc, u);
                for (auto &[e, u] : gc)
                    u = exact_div(u, cc);
                MP pp = ungroup(gc, v);
                if (divides(pp, a) && divides(pp, b))
                    return monic(times_uni(pp, c, v));
            }
        }
        throw InternalError("modular gcd ran out of evaluation points");
    }

    Uni scale(const Uni &u, int64_t s) const {
        Uni r = u;
        for (auto &x : r)
            x = mul(x, s);
        trim(r);
        return r;
    }

    MP ungroup_add(MP a, const MP &b) const {
        for (const auto &[e, c] : b)
            put(a, e, c);
        return a;
    }
};

bool is_prime(int64_t n) {
    if (n < 2)
        return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

MP reduce(const CommPoly &f, int64_t p) {
    MP out;
    for (const auto &[e, c] : f.terms()) {
        int64_t r = mod_p(c, p);
        if (r)
            out.emplace(e, r);
    }
    return out;
}

CommPoly primitive_positive(const CommPoly &f) {
    BigInt c = f.content();
    if (f.leading().second < 0)
        c = -c;
    return f.divided_by(c);
}

// gcd of primitive, nonconstant polynomials with nonnegative exponents.
CommPoly modular(const CommPoly &f, const CommPoly &g) {
    const int n = f.nvars();
    const BigInt lf = f.leading().second, lg = g.leading().second;
    const BigInt gamma = big_gcd(lf, lg);
    std::map<Exps, BigInt> H;
    BigInt M = 0;
    Exps hdeg;
    int64_t p = (int64_t{1} << 31) - 1;
    for (int primes = 0; primes < 4000; --p) {
        if (!is_prime(p) || lf % p == 0 || lg % p == 0)
            continue;
        ++primes;
        Fp F(p);
        MP gp = F.gcd(reduce(f, p), reduce(g, p), n);
        if (gp.size() == 1 && std::all_of(gp.begin()->first.begin(), gp.begin()->first.end(),
                                          [](int x) { return x == 0; }))
            return CommPoly::constant(f.vars(), 1);
        gp = F.scaled(gp, mod_p(gamma, p));
        const Exps &d = gp.rbegin()->first;
        if (M == 0 || d < hdeg) {
            H.clear();
            for (const auto &[e, c] : gp)
                H[e] = c > p / 2 ? BigInt(c - p) : BigInt(c);
            M = p;
            hdeg = d;
            continue;
        }
        if (hdeg < d)
            continue;
        // Chinese remaindering into the symmetric range mod M p.
        BigInt Mp = M * p;
        int64_t minv = F.inv(mod_p(M, p));
        bool changed = false;
        std::map<Exps, BigInt> next;
        std::set<Exps> keys;
        for (const auto &[e, c] : H)
            keys.insert(e);
        for (const auto &[e, c] : gp)
            keys.insert(e);
        for (const Exps &e : keys) {
            BigInt h = H.count(e) ? H[e] : BigInt(0);
            int64_t r = gp.count(e) ? gp.at(e) : 0;
            int64_t t = F.mul(F.sub(r, mod_p(h, p)), minv);
            BigInt x = h + M * t;
            if (x > Mp / 2)
                x -= Mp;
            if (x != h)
                changed = true;
            if (x != 0)
                next[e] = x;
        }
        H = std::move(next);
        M = Mp;
        if (changed)
            continue;
        CommPoly cand(f.vars());
        for (const auto &[e, c] : H)
            cand.add_term(e, c);
        cand = primitive_positive(cand);
        if (exact_divide(f, cand) && exact_divide(g, cand))
            return cand;
    }
    throw InternalError("modular gcd did not converge");
}

} // namespace

CommPoly poly_gcd(const CommPoly &f, const CommPoly &g) {
    for (const CommPoly *x : {&f, &g}) {
        Exps m = x->min_exponents();
        if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; }))
            throw DomainError("gcd needs nonnegative exponents");
    }
    if (f.is_zero())
        return g.is_zero() ? g : primitive_positive(g) * g.content();
    if (g.is_zero())
        return primitive_positive(f) * f.content();
    BigInt c = big_gcd(f.content(), g.content());
    if (f.is_constant() || g.is_constant())
        return CommPoly::constant(f.vars(), c);
    return modular(primitive_positive(f), primitive_positive(g)) * c;
}

} // namespace kch

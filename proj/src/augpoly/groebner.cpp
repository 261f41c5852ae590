#include "kch/augpoly/groebner.hpp"
#include "kch/errors.hpp"

#include <algorithm>

namespace kch {

namespace {

struct Term {
    Exps e;
    BigInt c;
};

// Terms in strictly decreasing monomial order.
using Poly = std::vector<Term>;

class Order {
  public:
    // Lex when split < 0, otherwise grevlex on [0, split) then grevlex on the rest.
    Order(int nvars, int split) : n_(nvars), split_(split) {}

    bool greater(const Exps &a, const Exps &b) const {
        if (split_ < 0)
            return a > b;
        int c = grevlex(a, b, 0, split_);
        if (c == 0)
            c = grevlex(a, b, split_, n_);
        return c > 0;
    }

  private:
    static int grevlex(const Exps &a, const Exps &b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db)
            return da > db ? 1 : -1;
        for (int i = hi - 1; i >= lo; --i)
            if (a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    int n_, split_;
};

bool divides(const Exps &a, const Exps &b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Exps lcm(const Exps &a, const Exps &b) {
    Exps m(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        m[i] = std::max(a[i], b[i]);
    return m;
}

Exps diff(const Exps &a, const Exps &b) {
    Exps m(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        m[i] = a[i] - b[i];
    return m;
}

bool coprime(const Exps &a, const Exps &b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i])
            return false;
    return true;
}

Poly to_poly(const CommPoly &p, const Order &ord) {
    Poly out;
    for (const auto &[e, c] : p.terms())
        out.push_back({e, c});
    std::sort(out.begin(), out.end(),
              [&](const Term &a, const Term &b) { return ord.greater(a.e, b.e); });
    return out;
}

CommPoly to_commpoly(const Poly &p, const std::vector<std::string> &vars) {
    CommPoly out(vars);
    for (const Term &t : p)
        out.add_term(t.e, t.c);
    return out;
}

void make_primitive(Poly &p) {
    if (p.empty())
        return;
    BigInt g = 0;
    for (const Term &t : p) {
        g = big_gcd(g, t.c);
        if (g == 1)
            break;
    }
    if (p.front().c < 0)
        g = -g;
    if (g != 1)
        for (Term &t : p)
            t.c /= g;
}

// a * x - b * (y shifted by s), merged in order.
Poly combine(const Poly &x, const BigInt &a, const Poly &y, const Exps &s, const BigInt &b,
             const Order &ord) {
    Poly out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    Exps ys;
    auto shifted = [&](size_t k) {
        ys = y[k].e;
        for (size_t v = 0; v < ys.size(); ++v)
            ys[v] += s[v];
        return ys;
    };
    while (i < x.size() || j < y.size()) {
        if (j == y.size()) {
            out.push_back({x[i].e, x[i].c * a});
            ++i;
            continue;
        }
        Exps e = shifted(j);
        if (i == x.size() || ord.greater(e, x[i].e)) {
            out.push_back({std::move(e), -(y[j].c * b)});
            ++j;
        } else if (ord.greater(x[i].e, e)) {
            out.push_back({x[i].e, x[i].c * a});
            ++i;
        } else {
            BigInt c = x[i].c * a - y[j].c * b;
            if (c != 0)
                out.push_back({std::move(e), std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

class Engine {
  public:
    Engine(const GroebnerOptions &opt, const Order &ord) : opt_(opt), ord_(ord) {}

    // Reduces h modulo g; with `full` the tail is reduced as well.
    Poly reduce(Poly h, const std::vector<Poly> &g, bool full) {
        Poly r;
        while (!h.empty()) {
            if (++steps_ > opt_.max_reductions)
                throw ResourceLimit("Groebner basis computation exceeded " +
                                    std::to_string(opt_.max_reductions) + " reduction steps");
            const Poly *hit = nullptr;
            for (const Poly &q : g)
                if (divides(q.front().e, h.front().e)) {
                    hit = &q;
                    break;
                }
            if (!hit) {
                if (!full)
                    break;
                r.push_back(std::move(h.front()));
                h.erase(h.begin());
                continue;
            }
            const BigInt &ch = h.front().c, &cq = hit->front().c;
            BigInt g0 = big_gcd(ch, cq);
            BigInt mh = cq / g0, mq = ch / g0;
            if (mh < 0) {
                mh = -mh;
                mq = -mq;
            }
            h = combine(h, mh, *hit, diff(h.front().e, hit->front().e), mq, ord_);
            if (mh != 1)
                for (Term &t : r)
                    t.c *= mh;
            if (h.size() > 16 && (steps_ & 7) == 0) {
                BigInt c = 0;
                for (const Term &t : h)
                    c = big_gcd(c, t.c);
                for (const Term &t : r)
                    c = big_gcd(c, t.c);
                if (c > 1) {
                    for (Term &t : h)
                        t.c /= c;
                    for (Term &t : r)
                        t.c /= c;
                }
            }
        }
        for (Term &t : h)
            r.push_back(std::move(t));
        make_primitive(r);
        return r;
    }

  private:
    const GroebnerOptions &opt_;
    const Order &ord_;
    long steps_ = 0;
};

struct Pair {
    size_t i, j;
    Exps lcm;
};

std::vector<Poly> buchberger(const std::vector<CommPoly> &ideal, const Order &ord,
                             const GroebnerOptions &opt) {
    Engine eng(opt, ord);
    std::vector<Poly> G;
    std::vector<Pair> pairs;
    auto add = [&](Poly h) {
        if (static_cast<int>(G.size()) >= opt.max_basis)
            throw ResourceLimit("Groebner basis grew beyond " + std::to_string(opt.max_basis) +
                                " elements");
        const Exps &lh = h.front().e;
        // Chain criterion on the pairs already queued.
        std::erase_if(pairs, [&](const Pair &p) {
            return divides(lh, p.lcm) && lcm(G[p.i].front().e, lh) != p.lcm &&
                   lcm(G[p.j].front().e, lh) != p.lcm;
        });
        size_t t = G.size();
        G.push_back(std::move(h));
        for (size_t k = 0; k < t; ++k)
            pairs.push_back({k, t, lcm(G[k].front().e, G[t].front().e)});
    };
    for (const CommPoly &p : ideal) {
        Poly r = eng.reduce(to_poly(p, ord), G, true);
        if (!r.empty())
            add(std::move(r));
    }
    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair &a, const Pair &b) {
            int da = 0, db = 0;
            for (size_t k = 0; k < a.lcm.size(); ++k) {
                da += a.lcm[k];
                db += b.lcm[k];
            }
            if (da != db)
                return da < db;
            if (a.lcm != b.lcm)
                return ord.greater(b.lcm, a.lcm);
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        Pair pr = *best;
        pairs.erase(best);
        const Term &ti = G[pr.i].front(), &tj = G[pr.j].front();
        if (coprime(ti.e, tj.e))
            continue;
        BigInt g0 = big_gcd(ti.c, tj.c);
        Poly si = G[pr.i];
        Exps si_shift = diff(pr.lcm, ti.e);
        for (Term &t : si)
            for (size_t v = 0; v < t.e.size(); ++v)
                t.e[v] += si_shift[v];
        Poly s = combine(si, tj.c / g0, G[pr.j], diff(pr.lcm, tj.e), ti.c / g0, ord);
        Poly r = eng.reduce(std::move(s), G, true);
        if (r.empty())
            continue;
        if (r.size() == 1 && std::all_of(r[0].e.begin(), r[0].e.end(), [](int x) { return x == 0; }))
            return {r};
        add(std::move(r));
    }
    // Minimal basis, then interreduce.
    std::vector<Poly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const Exps &a = G[j].front().e, &b = G[i].front().e;
            if (divides(a, b) && (a != b || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(G[i]);
    }
    std::vector<Poly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced.push_back(eng.reduce(minimal[i], others, true));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Poly &a, const Poly &b) { return ord.greater(b.front().e, a.front().e); });
    return reduced;
}

void check_input(const std::vector<CommPoly> &ideal, const GroebnerOptions &opt) {
    const auto &vars = ideal[0].vars();
    if (static_cast<int>(vars.size()) > opt.max_vars)
        throw ResourceLimit("Groebner elimination over " + std::to_string(vars.size()) +
                            " variables exceeds the cap of " + std::to_string(opt.max_vars));
    for (const CommPoly &p : ideal) {
        if (p.vars() != vars)
            throw DomainError("ideal generators over different variable lists");
        Exps m = p.min_exponents();
        if (std::any_of(m.begin(), m.end(), [](int x) { return x < 0; }))
            throw DomainError("Groebner bases need polynomial (not Laurent) generators");
    }
}

} // namespace

std::vector<CommPoly> groebner_lex(const std::vector<CommPoly> &ideal, const GroebnerOptions &opt) {
    if (ideal.empty())
        return {};
    check_input(ideal, opt);
    const auto &vars = ideal[0].vars();
    std::vector<CommPoly> out;
    for (const Poly &p : buchberger(ideal, Order(static_cast<int>(vars.size()), -1), opt))
        out.push_back(to_commpoly(p, vars));
    return out;
}

std::vector<CommPoly> eliminate(const std::vector<CommPoly> &ideal,
                                const std::vector<std::string> &elim, const GroebnerOptions &opt) {
    if (ideal.empty())
        return {};
    check_input(ideal, opt);
    std::vector<std::string> order = elim, rest;
    for (const auto &v : ideal[0].vars())
        if (std::find(elim.begin(), elim.end(), v) == elim.end())
            rest.push_back(v);
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<CommPoly> in;
    for (const CommPoly &p : ideal)
        in.push_back(p.with_vars(order));
    int n = static_cast<int>(order.size());
    Order ord(n, opt.block_order ? static_cast<int>(elim.size()) : -1);
    std::vector<CommPoly> out;
    for (const Poly &g : buchberger(in, ord, opt)) {
        CommPoly p = to_commpoly(g, order);
        bool free = true;
        for (size_t v = 0; v < elim.size(); ++v)
            if (p.mentions(static_cast<int>(v)))
                free = false;
        if (free)
            out.push_back(p.with_vars(rest));
    }
    return out;
}

} // namespace kch

#pragma once

#include "kch/errors.hpp"
#include "kch/ncalg/ncpoly.hpp"
#include "kch/ncalg/targets.hpp"

#include <map>
#include <string>

namespace kch {

/// Values for coefficient variables (by name) and degree-0 chord letters.
/// Homology letters of fully noncommutative words are looked up in `vars`
/// under their base name ("la1", "mu2", "mt3"). Letters of nonzero degree
/// evaluate to 0.
template <class R> struct Assignment {
    R ring{};
    std::map<std::string, typename R::Value> vars;
    std::map<Letter, typename R::Value> chords;
};

template <class R>
typename R::Value power_of(const R &ring, const typename R::Value &x, int e) {
    typename R::Value base = x;
    if (e < 0) {
        if (!ring.is_unit(x))
            throw DomainError("non-unit value " + ring.str(x) + " assigned to an invertible variable");
        base = ring.inverse(x);
        e = -e;
    }
    typename R::Value r = ring.one();
    while (e > 0) {
        if (e & 1)
            r = ring.mul(r, base);
        e >>= 1;
        if (e > 0)
            base = ring.mul(base, base);
    }
    return r;
}

template <class R>
typename R::Value eval_laurent(const Laurent &c, const std::vector<std::string> &names,
                               const Assignment<R> &a) {
    const R &ring = a.ring;
    std::vector<const typename R::Value *> vals(names.size(), nullptr);
    typename R::Value total = ring.zero();
    for (const auto &[m, k] : c.terms()) {
        typename R::Value t = ring.from_int(k);
        for (size_t v = 0; v < names.size(); ++v) {
            if (m.exp[v] == 0)
                continue;
            if (!vals[v]) {
                auto it = a.vars.find(names[v]);
                if (it == a.vars.end())
                    throw DomainError("no value assigned to variable " + names[v]);
                if (!ring.is_unit(it->second))
                    throw DomainError("non-unit value " + ring.str(it->second) +
                                      " assigned to invertible variable " + names[v]);
                vals[v] = &it->second;
            }
            t = ring.mul(t, power_of(ring, *vals[v], m.exp[v]));
        }
        total = ring.add(total, t);
    }
    return total;
}

template <class R>
typename R::Value eval_letter(const Letter &l, const Assignment<R> &a) {
    const R &ring = a.ring;
    if (is_homology(l)) {
        Letter base = l;
        base.exp = 1;
        std::string name = letter_name(base);
        auto it = a.vars.find(name);
        if (it == a.vars.end())
            throw DomainError("no value assigned to " + name);
        return power_of(ring, it->second, l.exp);
    }
    if (letter_degree(l) != 0)
        return ring.zero();
    auto it = a.chords.find(l);
    if (it == a.chords.end())
        throw DomainError("no value assigned to generator " + letter_name(l));
    return it->second;
}

/// Ring homomorphism from the DGA algebra into the commutative target R.
template <class R> typename R::Value nc_eval(const NCPoly &p, const Assignment<R> &a) {
    const R &ring = a.ring;
    typename R::Value total = ring.zero();
    for (const auto &[w, c] : p.terms()) {
        typename R::Value t = eval_laurent(c, p.ring()->vars, a);
        for (const Letter &l : w)
            t = ring.mul(t, eval_letter(l, a));
        total = ring.add(total, t);
    }
    return total;
}

} // namespace kch

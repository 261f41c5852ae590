#pragma once

#include "kch/augment/augment.hpp"
#include "kch/dga/dga.hpp"
#include "kch/linhom/snf.hpp"

#include <map>
#include <string>
#include <vector>

namespace kch {

/// Free chain complex C_top -> ... -> C_0; boundary[k] maps C_k to C_{k-1}
/// (rows index C_{k-1}). boundary[0] is unused.
template <class R> struct ChainComplex {
    R ring{};
    std::vector<std::vector<Letter>> basis; // by degree
    std::vector<DenseMatrix<R>> boundary;

    int top() const { return static_cast<int>(basis.size()) - 1; }
    int dim(int k) const {
        return k >= 0 && k <= top() ? static_cast<int>(basis[k].size()) : 0;
    }
};

template <class R> struct HomologyGroup {
    int free_rank = 0;
    std::vector<typename R::Value> torsion; // non-unit invariant factors
};

template <class R> struct HomologyResult {
    std::vector<HomologyGroup<R>> groups; // by degree
};

/// Length-one part of the differential conjugated by eps: degree-0 generators
/// are shifted by their values and coefficients are evaluated.
template <class R>
ChainComplex<R> linearized_complex(const DGA &d, const Augmentation<R> &eps) {
    const R &ring = eps.ring;
    ChainComplex<R> c;
    c.ring = ring;
    int top = 0;
    for (const auto &g : d.generators) {
        if (g.degree < 0)
            throw DomainError("negative degree generator " + g.name());
        top = std::max(top, g.degree);
    }
    c.basis.assign(top + 1, {});
    std::map<Letter, std::pair<int, int>> where; // degree, index
    for (const auto &g : d.generators) {
        where[g.letter] = {g.degree, static_cast<int>(c.basis[g.degree].size())};
        c.basis[g.degree].push_back(g.letter);
    }
    c.boundary.resize(top + 1);
    for (int k = 0; k <= top; ++k)
        c.boundary[k] = DenseMatrix<R>(ring, k > 0 ? c.dim(k - 1) : 0, c.dim(k));

    auto value_of = [&](const Letter &l) { return eval_letter(l, eps); };
    for (const auto &g : d.generators) {
        const NCPoly &dg = d.d(g.letter);
        auto constant = ring.zero();
        for (const auto &[w, coeff] : dg.terms()) {
            auto cv = eval_laurent(coeff, d.ring->vars, eps);
            if (ring.is_zero(cv))
                continue;
            std::vector<typename R::Value> vals;
            vals.reserve(w.size());
            for (const Letter &l : w)
                vals.push_back(value_of(l));
            auto all = cv;
            for (const auto &v : vals)
                all = ring.mul(all, v);
            constant = ring.add(constant, all);
            for (size_t pos = 0; pos < w.size(); ++pos) {
                if (is_homology(w[pos]))
                    continue;
                auto t = cv;
                for (size_t q = 0; q < w.size() && !ring.is_zero(t); ++q)
                    if (q != pos)
                        t = ring.mul(t, vals[q]);
                if (ring.is_zero(t))
                    continue;
                auto it = where.find(w[pos]);
                if (it == where.end())
                    throw DomainError("differential mentions unknown generator " +
                                      letter_name(w[pos]));
                auto [deg, row] = it->second;
                if (deg != g.degree - 1)
                    throw InternalError("inhomogeneous differential of " + g.name());
                int col = where[g.letter].second;
                auto &entry = c.boundary[g.degree](row, col);
                entry = ring.add(entry, t);
            }
        }
        if (!ring.is_zero(constant))
            throw DomainError("not an augmentation: constant term " + ring.str(constant) +
                              " in the differential of " + g.name());
    }
    return c;
}

template <class R> HomologyResult<R> homology(const ChainComplex<R> &c) {
    const R &ring = c.ring;
    int top = c.top();
    for (int k = 2; k <= top; ++k)
        if (!is_zero_matrix(ring, mat_product(ring, c.boundary[k - 1], c.boundary[k])))
            throw DomainError("boundary maps do not compose to zero in degree " +
                              std::to_string(k));
    std::vector<SmithForm<R>> snf(top + 2);
    for (int k = 1; k <= top; ++k)
        snf[k] = smith_normal_form(ring, c.boundary[k]);
    HomologyResult<R> out;
    for (int k = 0; k <= top; ++k) {
        HomologyGroup<R> h;
        int in_rank = k + 1 <= top ? snf[k + 1].rank : 0;
        int out_rank = k >= 1 ? snf[k].rank : 0;
        h.free_rank = c.dim(k) - out_rank - in_rank;
        if (k + 1 <= top)
            for (const auto &f : snf[k + 1].factors)
                if (!ring.is_unit(f))
                    h.torsion.push_back(f);
        out.groups.push_back(std::move(h));
    }
    return out;
}

/// "Z^2 + Z/3 + Z/3" style text; "0" for the trivial group.
template <class R> std::string group_string(const R &ring, const HomologyGroup<R> &h) {
    std::vector<std::string> parts;
    std::string base = R::name;
    if (h.free_rank == 1)
        parts.push_back(base);
    else if (h.free_rank > 1)
        parts.push_back(base + "^" + std::to_string(h.free_rank));
    for (const auto &t : h.torsion)
        parts.push_back(base + "/(" + ring.str(t) + ")");
    if (parts.empty())
        return "0";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i)
        s += " + " + parts[i];
    return s;
}

} // namespace kch

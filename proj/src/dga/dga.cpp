#include "kch/dga/dga.hpp"
#include "kch/errors.hpp"
#include "kch/ncalg/ncmatrix.hpp"

#include <algorithm>
#include <set>

namespace kch {

std::string variant_name(DgaVariant v) {
    switch (v) {
    case DgaVariant::Topological: return "topological";
    case DgaVariant::TransverseU: return "transverse";
    case DgaVariant::TransverseUV: return "transverse-uv";
    case DgaVariant::Hat: return "hat";
    }
    return "?";
}

DgaVariant parse_variant(const std::string &s) {
    if (s == "topological")
        return DgaVariant::Topological;
    if (s == "transverse" || s == "transverse-u")
        return DgaVariant::TransverseU;
    if (s == "transverse-uv")
        return DgaVariant::TransverseUV;
    if (s == "hat")
        return DgaVariant::Hat;
    throw DomainError("unknown DGA mode '" + s + "'");
}

const NCPoly &DGA::d(const Letter &g) const {
    auto it = diff.find(g);
    if (it == diff.end())
        throw DomainError("no generator " + letter_name(g) + " in this DGA");
    return it->second;
}

LetterMap DGA::differential_map() const {
    return [this](const Letter &l) -> std::optional<NCPoly> {
        auto it = diff.find(l);
        if (it == diff.end())
            return std::nullopt;
        return it->second;
    };
}

std::vector<Letter> DGA::generators_of_degree(int degree) const {
    std::vector<Letter> out;
    for (const auto &g : generators)
        if (g.degree == degree)
            out.push_back(g.letter);
    return out;
}

bool DGA::operator==(const DGA &o) const {
    if (!(*ring == *o.ring) || generators.size() != o.generators.size())
        return false;
    for (size_t k = 0; k < generators.size(); ++k)
        if (generators[k].letter != o.generators[k].letter ||
            generators[k].degree != o.generators[k].degree)
            return false;
    for (const auto &[g, dg] : diff) {
        auto it = o.diff.find(g);
        if (it == o.diff.end() || dg.terms() != it->second.terms())
            return false;
    }
    return true;
}

namespace {

StarStrand resolve_star(const DgaMode &mode, int r) {
    if (mode.star)
        return *mode.star;
    return (r == 1 && mode.algebra == AlgebraMode::Commuted) ? StarStrand::HighNPlus1
                                                             : StarStrand::Low0;
}

RingPtr ring_for(int r, DgaVariant variant, AlgebraMode algebra, bool with_u) {
    std::vector<std::string> vars;
    if (algebra == AlgebraMode::Commuted) {
        for (int a = 1; a <= r; ++a)
            vars.push_back(longitude_name(a, r));
        for (int a = 1; a <= r; ++a)
            vars.push_back(meridian_name(a, r));
    }
    if (with_u)
        vars.push_back("U");
    if (variant == DgaVariant::TransverseUV)
        vars.push_back("V");
    return make_ring(vars, algebra, with_u && variant != DgaVariant::Topological);
}

class Assembler {
  public:
    Assembler(const BraidWord &b, const DgaMode &mode, StarStrand star)
        : b_(b), mode_(mode), star_(star), cm_(components(b)), n_(b.strands()),
          nc_(mode.algebra == AlgebraMode::FullyNoncommutative) {
        DgaVariant v = mode.variant == DgaVariant::Hat ? DgaVariant::TransverseU : mode.variant;
        ring_ = ring_for(cm_.r, v, mode.algebra, true);
        iU_ = ring_->index_of("U");
        iV_ = ring_->index_of("V");
    }

    DGA build() {
        const bool uv = mode_.variant == DgaVariant::TransverseUV;
        const bool transverse = mode_.variant != DgaVariant::Topological;

        NCMatrix A = amat(Kind::Plain, false), Ahat = amat(Kind::Hat, false);
        NCMatrix Acheck = uv ? amat(Kind::Check, false) : A;
        NCMatrix phiA = amat(Kind::Plain, true);
        NCMatrix B = bmat(Kind::Plain), Bhat = bmat(Kind::Hat);
        NCMatrix Bcheck = uv ? bmat(Kind::Check) : B;
        NCMatrix C = gmat(LetterKind::C), D = gmat(LetterKind::D);

        std::vector<NCPoly> L, Linv;
        for (int i = 1; i <= n_; ++i) {
            NCPoly l = lentry(i, transverse);
            Linv.push_back(*l.unit_inverse());
            L.push_back(std::move(l));
        }
        PhiMatrices phi = phi_matrices(b_, star_, ring_);

        NCMatrix dB = mat_sub(A, mat_conj_diag(phiA, L));
        NCMatrix dC = mat_sub(Ahat, ldiag(L, mat_mul(phi.left, Acheck)));
        NCMatrix dD = mat_sub(Acheck, rdiag(mat_mul(Ahat, phi.right), Linv));
        NCMatrix dE = mat_sub(mat_sub(Bhat, C), ldiag(L, mat_mul(phi.left, D)));
        NCMatrix dF = mat_sub(mat_sub(Bcheck, D), rdiag(mat_mul(C, phi.right), Linv));

        DGA out;
        out.ring = ring_;
        out.braid = b_;
        out.mode = mode_;
        out.mode.star = star_;
        out.comps = cm_;
        auto add = [&](LetterKind k, int i, int j, NCPoly d) {
            Letter l = Letter::chord(k, i, j);
            out.generators.push_back({l, letter_degree(l)});
            out.diff.emplace(l, std::move(d));
        };
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j)
                    add(LetterKind::A, i, j, NCPoly(ring_));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                const NCPoly &rhs = dB.at(i - 1, j - 1);
                if (i == j) {
                    if (!rhs.is_zero())
                        throw InternalError("diagonal of the b-matrix differential is nonzero: " +
                                            rhs.to_string());
                } else if (i < j) {
                    add(LetterKind::B, i, j, rhs);
                } else {
                    // rhs = -(d b_ij) mu_alpha(j)
                    add(LetterKind::B, i, j, -nc_mul(rhs, mer(cm_.alpha[j], -1)));
                }
            }
        const std::pair<LetterKind, const NCMatrix *> square[] = {
            {LetterKind::C, &dC}, {LetterKind::D, &dD}, {LetterKind::E, &dE}, {LetterKind::F, &dF}};
        for (const auto &[k, m] : square)
            for (int i = 1; i <= n_; ++i)
                for (int j = 1; j <= n_; ++j)
                    add(k, i, j, m->at(i - 1, j - 1));

        if (transverse) {
            for (const auto &[g, dg] : out.diff)
                for (const auto &t : dg.terms())
                    if (t.second.min_exponent(iU_) < 0)
                        throw InternalError("negative power of U in transverse differential of " +
                                            letter_name(g));
        }
        return out;
    }

  private:
    enum class Kind { Plain, Hat, Check };

    NCPoly coef(const Laurent &c) const { return NCPoly::constant(ring_, c); }
    NCPoly U() const { return coef(Laurent::variable(iU_)); }
    NCPoly V() const { return coef(Laurent::variable(iV_)); }
    NCPoly mer(int alpha, int e = 1) const {
        if (nc_)
            return NCPoly::letter(ring_, Letter::homology(LetterKind::Mu, alpha, e));
        return coef(Laurent::variable(ring_->index_of(meridian_name(alpha, cm_.r)), e));
    }
    NCPoly gen(LetterKind k, int i, int j) const {
        return NCPoly::letter(ring_, Letter::chord(k, i, j));
    }

    NCMatrix amat(Kind kind, bool phi_applied) {
        if (phi_applied && images_.empty())
            images_ = projected_chord_images(b_, ring_, -1);
        NCMatrix m(ring_, n_, n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                NCPoly &e = m.at(i - 1, j - 1);
                NCPoly a = i == j ? NCPoly(ring_)
                                  : (phi_applied ? images_.at(Letter::a(i, j))
                                                 : gen(LetterKind::A, i, j));
                if (i < j) {
                    e = kind == Kind::Hat ? U() * a : a;
                } else if (i > j) {
                    e = -(a * mer(cm_.alpha[j]));
                    if (kind == Kind::Check)
                        e = e * V();
                } else {
                    NCPoly mu = mer(cm_.alpha[i]);
                    if (kind == Kind::Check)
                        mu = mu * V();
                    e = (kind == Kind::Hat ? U() : coef(1)) - mu;
                }
            }
        return m;
    }

    NCMatrix bmat(Kind kind) const {
        NCMatrix m(ring_, n_, n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                if (i == j)
                    continue;
                NCPoly b = gen(LetterKind::B, i, j);
                NCPoly &e = m.at(i - 1, j - 1);
                if (i < j) {
                    e = kind == Kind::Hat ? U() * b : b;
                } else {
                    e = -(b * mer(cm_.alpha[j]));
                    if (kind == Kind::Check)
                        e = e * V();
                }
            }
        return m;
    }

    NCMatrix gmat(LetterKind k) const {
        NCMatrix m(ring_, n_, n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                m.at(i - 1, j - 1) = gen(k, i, j);
        return m;
    }

    NCPoly lentry(int strand, bool transverse) const {
        if (!cm_.is_leading(strand))
            return coef(1);
        int a = cm_.alpha[strand];
        int w = cm_.writhe[a];
        int shift = transverse ? 0 : -(w - cm_.strand_count[a] + 1) / 2;
        Laurent u = Laurent::variable(iU_, shift);
        if (nc_)
            return NCPoly::word(ring_, {Letter::homology(LetterKind::Lambda, a, 1),
                                        Letter::homology(LetterKind::Mu, a, w)},
                                u);
        int il = ring_->index_of(longitude_name(a, cm_.r));
        int im = ring_->index_of(meridian_name(a, cm_.r));
        return coef(Laurent::variable(il) * Laurent::variable(im, w) * u);
    }

    NCMatrix ldiag(const std::vector<NCPoly> &l, const NCMatrix &m) const {
        NCMatrix r = m;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                r.at(i, j) = nc_mul(l[i], m.at(i, j));
        return r;
    }
    NCMatrix rdiag(const NCMatrix &m, const std::vector<NCPoly> &l) const {
        NCMatrix r = m;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                r.at(i, j) = nc_mul(m.at(i, j), l[j]);
        return r;
    }

    const BraidWord &b_;
    DgaMode mode_;
    StarStrand star_;
    ComponentMap cm_;
    int n_;
    bool nc_;
    RingPtr ring_;
    int iU_ = -1, iV_ = -1;
    std::map<Letter, NCPoly> images_;
};

} // namespace

RingPtr dga_ring(const BraidWord &b, const DgaMode &mode) {
    int r = components(b).r;
    bool with_u = mode.variant != DgaVariant::Hat;
    return ring_for(r, mode.variant, mode.algebra, with_u);
}

DGA build_dga(const BraidWord &b, const DgaMode &mode) {
    ComponentMap cm = components(b);
    StarStrand star = resolve_star(mode, cm.r);
    if ((cm.r > 1 || mode.algebra == AlgebraMode::FullyNoncommutative) &&
        star != StarStrand::Low0)
        throw DomainError("links and fully noncommutative DGAs require the extra strand "
                          "to be strand 0");
    DGA d = Assembler(b, mode, star).build();
    if (mode.variant == DgaVariant::Hat) {
        d.mode.variant = DgaVariant::TransverseU;
        d = specialize(d, {{"U", Laurent(0)}});
    }
    return d;
}

D2Report check_d_squared(const DGA &d) {
    D2Report rep;
    LetterMap images = d.differential_map();
    for (const auto &g : d.generators) {
        NCPoly dd = nc_derive(d.d(g.letter), images);
        ++rep.checked;
        if (!dd.is_zero()) {
            rep.pass = false;
            rep.offender = g.letter;
            rep.residue = dd;
            return rep;
        }
    }
    return rep;
}

DGA specialize(const DGA &d, const std::map<std::string, Laurent> &bindings) {
    const auto &vars = d.ring->vars;
    std::vector<std::pair<int, Laurent>> subs;
    std::set<int> removed;
    for (const auto &[name, value] : bindings) {
        int v = d.ring->index_of(name);
        if (v < 0)
            throw DomainError("cannot bind unknown variable '" + name + "'");
        if (name == "U" && value.is_zero() && !d.ring->u_nonnegative)
            throw DomainError("U = 0 is only allowed for transverse DGAs");
        if (!value.mentions(v))
            removed.insert(v);
        subs.emplace_back(v, value);
    }
    for (const auto &[v, value] : subs)
        for (int r : removed)
            if (r != v && value.mentions(r))
                throw DomainError("binding for " + vars[v] + " refers to bound variable " + vars[r]);
    std::vector<std::string> kept;
    std::vector<int> index_map(vars.size(), -1);
    for (size_t v = 0; v < vars.size(); ++v)
        if (!removed.count(static_cast<int>(v))) {
            index_map[v] = static_cast<int>(kept.size());
            kept.push_back(vars[v]);
        }
    bool u_kept = std::find(kept.begin(), kept.end(), "U") != kept.end();
    RingPtr ring = make_ring(kept, d.ring->mode, d.ring->u_nonnegative && u_kept);
    CoeffMap cmap = [&](const Laurent &c) {
        Laurent x = c;
        for (const auto &[v, value] : subs)
            x = x.substitute(v, value);
        return x.reindex(index_map);
    };
    LetterMap keep = [](const Letter &) { return std::optional<NCPoly>(); };
    DGA out = d;
    out.ring = ring;
    out.diff.clear();
    for (const auto &[g, dg] : d.diff)
        out.diff.emplace(g, substitute(dg, keep, ring, cmap));
    auto u = bindings.find("U");
    if (u != bindings.end() && u->second.is_zero() && d.mode.variant == DgaVariant::TransverseU)
        out.mode.variant = DgaVariant::Hat;
    return out;
}

DGA stabilize(const DGA &d, int degree) {
    if (degree < 1 || degree > 255)
        throw DomainError("stabilization degree must be between 1 and 255");
    int next = 1;
    for (const auto &g : d.generators)
        if (g.letter.kind == LetterKind::Stab)
            next = std::max(next, g.letter.i + 1);
    if (next + 1 > 255)
        throw DomainError("too many stabilizations");
    DGA out = d;
    Letter e1 = Letter::stab(next, degree), e2 = Letter::stab(next + 1, degree - 1);
    out.generators.push_back({e1, degree});
    out.generators.push_back({e2, degree - 1});
    out.diff.emplace(e1, NCPoly::letter(d.ring, e2));
    out.diff.emplace(e2, NCPoly(d.ring));
    return out;
}

DGA sublink_quotient(const DGA &d, const std::vector<int> &strands) {
    const ComponentMap &cm = d.comps;
    int n = d.braid.strands();
    std::vector<bool> kept(n + 1, false);
    for (int s : strands) {
        if (s < 1 || s > n)
            throw DomainError("strand " + std::to_string(s) + " out of range");
        kept[s] = true;
    }
    for (int s = 1; s <= n; ++s)
        for (int t = 1; t <= n; ++t)
            if (cm.alpha[s] == cm.alpha[t] && kept[s] != kept[t])
                throw DomainError("strand set is not a union of closure components");
    std::vector<int> keep_list;
    for (int s = 1; s <= n; ++s)
        if (kept[s])
            keep_list.push_back(s);
    if (keep_list.empty())
        throw DomainError("sublink must keep at least one strand");
    if (static_cast<int>(keep_list.size()) == n)
        return d;
    if (d.mode.star != StarStrand::Low0)
        throw DomainError("sublink quotients require the extra strand to be strand 0");

    BraidWord sb = sub_braid(d.braid, keep_list);
    ComponentMap scm = components(sb);
    std::vector<int> new_index(n + 1, 0);
    for (size_t k = 0; k < keep_list.size(); ++k)
        new_index[keep_list[k]] = static_cast<int>(k) + 1;
    std::vector<int> new_comp(cm.r + 1, 0);
    for (int s : keep_list)
        new_comp[cm.alpha[s]] = scm.alpha[new_index[s]];

    RingPtr ring = ring_for(scm.r, d.mode.variant == DgaVariant::Hat ? DgaVariant::TransverseU
                                                                     : d.mode.variant,
                            d.ring->mode, d.ring->index_of("U") >= 0);
    // Coefficient variables: per-component names follow the new numbering.
    std::vector<int> index_map(d.ring->vars.size(), -1);
    for (size_t v = 0; v < d.ring->vars.size(); ++v) {
        const std::string &name = d.ring->vars[v];
        std::string target = name;
        for (int a = 1; a <= cm.r; ++a) {
            if (name == longitude_name(a, cm.r))
                target = new_comp[a] ? longitude_name(new_comp[a], scm.r) : "";
            if (name == meridian_name(a, cm.r))
                target = new_comp[a] ? meridian_name(new_comp[a], scm.r) : "";
        }
        index_map[v] = target.empty() ? -1 : ring->index_of(target);
    }
    CoeffMap cmap = [&](const Laurent &c) {
        for (size_t v = 0; v < index_map.size(); ++v)
            if (index_map[v] < 0 && c.mentions(static_cast<int>(v)))
                throw InternalError("quotient retains variable " + d.ring->vars[v] +
                                    " of a removed component");
        return c.reindex(index_map);
    };
    LetterMap drop = [&](const Letter &l) -> std::optional<NCPoly> {
        if (is_chord(l) && (!kept[l.i] || !kept[l.j]))
            return NCPoly(d.ring);
        return std::nullopt;
    };
    LetterMap lmap = [&](const Letter &l) -> std::optional<NCPoly> {
        if (is_chord(l)) {
            if (!kept[l.i] || !kept[l.j])
                return NCPoly(ring);
            return NCPoly::letter(ring, Letter::chord(l.kind, new_index[l.i], new_index[l.j]));
        }
        if (l.kind == LetterKind::Lambda || l.kind == LetterKind::Mu) {
            if (!new_comp[l.i])
                throw InternalError("quotient retains a homology letter of a removed component");
            return NCPoly::letter(ring, Letter::homology(l.kind, new_comp[l.i], l.exp));
        }
        return std::nullopt;
    };

    DGA out;
    out.ring = ring;
    out.braid = sb;
    out.mode = d.mode;
    out.comps = scm;
    for (const auto &g : d.generators) {
        const Letter &l = g.letter;
        if (is_chord(l) && (!kept[l.i] || !kept[l.j]))
            continue;
        Letter nl = is_chord(l) ? Letter::chord(l.kind, new_index[l.i], new_index[l.j]) : l;
        out.generators.push_back({nl, g.degree});
        out.diff.emplace(nl, substitute(substitute(d.d(l), drop), lmap, ring, cmap));
    }
    std::stable_sort(out.generators.begin(), out.generators.end(),
                     [](const Generator &x, const Generator &y) {
                         bool sx = x.letter.kind == LetterKind::Stab;
                         bool sy = y.letter.kind == LetterKind::Stab;
                         if (sx != sy)
                             return sy;
                         if (sx)
                             return false;
                         return x.letter < y.letter;
                     });
    return out;
}

} // namespace kch

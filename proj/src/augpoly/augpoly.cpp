#include "kch/augpoly/augpoly.hpp"
#include "kch/augpoly/polyalg.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <set>

namespace kch {

std::string method_name(ElimMethod m) {
    return m == ElimMethod::Resultant ? "resultant" : "groebner";
}

ElimMethod parse_method(const std::string &s) {
    if (s == "resultant")
        return ElimMethod::Resultant;
    if (s == "groebner")
        return ElimMethod::Groebner;
    throw DomainError("unknown elimination method '" + s + "'");
}

namespace {

using PolySet = std::set<CommPoly, bool (*)(const CommPoly &, const CommPoly &)>;

bool by_terms(const CommPoly &a, const CommPoly &b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.terms() < b.terms();
}

std::vector<std::string> base_vars(bool two_variable) {
    return two_variable ? std::vector<std::string>{"la", "mu"}
                        : std::vector<std::string>{"la", "mu", "U"};
}

std::vector<CommPoly> dedupe(std::vector<CommPoly> ps) {
    PolySet seen(by_terms);
    std::vector<CommPoly> out;
    for (auto &p : ps)
        if (!p.is_zero() && seen.insert(p).second)
            out.push_back(std::move(p));
    return out;
}

struct ChainBlowup {};

// Empty result: the chain degenerated (every resultant vanished).
std::vector<CommPoly> resultant_chain(std::vector<CommPoly> polys,
                                      const std::vector<std::string> &order, size_t max_terms,
                                      std::vector<std::string> &certificate) {
    for (const auto &x : order) {
        if (polys.empty())
            break;
        int v = polys[0].index_of(x);
        std::vector<CommPoly> with, next;
        for (auto &p : polys)
            (p.mentions(v) ? with : next).push_back(std::move(p));
        if (with.empty())
            continue;
        certificate.push_back(x);
        std::stable_sort(with.begin(), with.end(), [&](const CommPoly &a, const CommPoly &b) {
            if (a.degree(v) != b.degree(v))
                return a.degree(v) < b.degree(v);
            return a.size() < b.size();
        });
        for (size_t k = 1; k < with.size(); ++k) {
            CommPoly r = resultant(with[0], with[k], v);
            if (r.size() > max_terms)
                throw ChainBlowup{};
            if (!r.is_zero())
                next.push_back(normalize_units(r).poly);
        }
        polys = dedupe(std::move(next));
    }
    return polys;
}

// Splits f along partial contents; the product of the parts is f up to a constant.
void coarse_factors(const CommPoly &f, std::vector<CommPoly> &out) {
    if (f.is_constant())
        return;
    for (int v = 0; v < f.nvars(); ++v) {
        if (!f.mentions(v))
            continue;
        CommPoly c = content_in(f, v);
        if (!c.is_constant()) {
            coarse_factors(c, out);
            coarse_factors(*exact_divide(f, c), out);
            return;
        }
    }
    out.push_back(normalize_units(f).poly);
}

EliminationResult run(const BraidWord &b, bool two_variable, const AugPolyOptions &opt) {
    AugSystem sys = elimination_system(b, two_variable);
    int nchords = static_cast<int>(sys.chords.size());
    if (nchords > opt.max_chord_vars)
        throw ResourceLimit("elimination over " + std::to_string(nchords) +
                            " chord variables exceeds the cap of " +
                            std::to_string(opt.max_chord_vars));
    std::vector<std::string> order = elimination_order(sys);
    std::vector<std::string> base = base_vars(two_variable);

    EliminationResult res;
    res.method = opt.method;
    std::vector<CommPoly> final;
    if (opt.method == ElimMethod::Resultant) {
        // The membership order first; other orders only when it degenerates.
        std::vector<std::vector<std::string>> orders = {order, {}, {}};
        for (const Letter &c : sys.chords)
            orders[1].push_back(letter_name(c));
        orders[2].assign(order.rbegin(), order.rend());
        bool blowup = false;
        for (const auto &o : orders) {
            res.certificate.clear();
            try {
                final = resultant_chain(sys.equations, o, opt.max_terms, res.certificate);
            } catch (const ChainBlowup &) {
                blowup = true;
                final.clear();
            }
            if (!final.empty())
                break;
        }
        if (final.empty() && blowup)
            throw ResourceLimit("resultant chain exceeded " + std::to_string(opt.max_terms) +
                                " terms under every variable order it did not degenerate in");
    } else {
        std::vector<std::string> vars = sys.vars;
        vars.insert(vars.begin(), "sat");
        std::vector<CommPoly> ideal;
        for (const CommPoly &e : sys.equations)
            ideal.push_back(e.with_vars(vars));
        CommPoly units = CommPoly::variable(vars, "sat");
        for (const auto &u : base)
            units = units * CommPoly::variable(vars, u);
        ideal.push_back(units - CommPoly::constant(vars, 1));
        std::vector<std::string> elim = {"sat"};
        elim.insert(elim.end(), order.begin(), order.end());
        res.certificate = elim;
        final = eliminate(ideal, elim, opt.groebner);
    }
    CommPoly g(sys.vars);
    for (const CommPoly &p : final)
        g = poly_gcd(g, p.with_vars(sys.vars));
    if (g.is_zero())
        throw DomainError("elimination ideal is zero: the augmentation variety is not a "
                          "hypersurface");
    g = g.with_vars(base);
    if (g.is_constant())
        throw DomainError("elimination ideal has no codimension-one part");
    UnitNormalized before = normalize_units(g);
    CommPoly rad = radical(before.poly);
    UnitNormalized n = normalize_units(rad);
    res.candidate = n.poly;
    res.squarefree_applied = !(n.poly == before.poly);
    res.content_removed = before.scale != 1 && before.scale != -1;
    res.trivial_factors_removed =
        std::any_of(before.shift.begin(), before.shift.end(), [](int x) { return x != 0; });

    if (opt.check_primes.empty())
        return res;
    std::vector<CommPoly> parts;
    coarse_factors(res.candidate, parts);
    std::vector<bool> certified(parts.size(), false);
    DGA d = build_dga(b);
    for (int64_t p : opt.check_primes) {
        SearchOptions so;
        so.prime = p;
        so.max_chord_vars = opt.max_chord_vars;
        AugSolutions pts = enumerate_augmentations(d, so);
        res.primes_checked.push_back(p);
        for (const auto &pt : pts.points) {
            // pt starts with (la, mu, U).
            if (two_variable && pt[2] != 1)
                continue;
            std::vector<int64_t> vals(pt.begin(), pt.begin() + static_cast<long>(base.size()));
            ++res.points_checked;
            if (eval_mod(res.candidate, vals, p) != 0)
                throw InternalError("candidate " + res.candidate.to_string() +
                                    " does not vanish at an augmentation point mod " +
                                    std::to_string(p));
            int zero_at = -1, zeros = 0;
            for (size_t k = 0; k < parts.size(); ++k)
                if (eval_mod(parts[k], vals, p) == 0) {
                    zero_at = static_cast<int>(k);
                    ++zeros;
                }
            if (zeros == 1)
                certified[zero_at] = true;
        }
    }
    for (size_t k = 0; k < parts.size(); ++k)
        if (!certified[k])
            res.uncertified.push_back(parts[k]);
    return res;
}

CommPoly substitute_monomial(const CommPoly &p, const std::string &var, const std::string &value) {
    int v = p.index_of(var);
    if (v < 0)
        return p;
    return p.substitute(v, parse_commpoly(value, p.vars()));
}

} // namespace

AugSystem elimination_system(const BraidWord &b, bool two_variable) {
    if (components(b).r != 1)
        throw DomainError("augmentation polynomials are defined for knots only");
    AugSystem sys = aug_system(build_dga(b));
    std::vector<CommPoly> eqs;
    if (two_variable) {
        std::vector<std::string> vars;
        for (const auto &v : sys.vars)
            if (v != "U")
                vars.push_back(v);
        int u = sys.vars.size() ? CommPoly(sys.vars).index_of("U") : -1;
        for (const CommPoly &e : sys.equations)
            eqs.push_back(e.substitute(u, CommPoly::constant(sys.vars, 1)).with_vars(vars));
        sys.vars = vars;
        sys.units = 2;
    } else {
        eqs = sys.equations;
    }
    for (auto &e : eqs)
        e = normalize_units(e).poly;
    sys.equations = dedupe(std::move(eqs));
    return sys;
}

std::vector<std::string> elimination_order(const AugSystem &sys) {
    std::vector<std::pair<int, std::string>> counted;
    for (size_t k = 0; k < sys.chords.size(); ++k) {
        int v = sys.units + static_cast<int>(k);
        int count = 0;
        for (const CommPoly &e : sys.equations)
            count += e.mentions(v);
        counted.emplace_back(count, sys.vars[v]);
    }
    std::stable_sort(counted.begin(), counted.end(),
                     [](const auto &a, const auto &b) { return a.first > b.first; });
    std::vector<std::string> out;
    for (auto &[c, name] : counted)
        out.push_back(name);
    return out;
}

EliminationResult augmentation_polynomial(const BraidWord &b, const AugPolyOptions &opt) {
    return run(b, false, opt);
}

EliminationResult two_variable_augpoly(const BraidWord &b, const AugPolyOptions &opt) {
    return run(b, true, opt);
}

SymmetryReport check_symmetries(const CommPoly &p, const std::optional<CommPoly> &mirror) {
    SymmetryReport rep;
    bool has_u = p.index_of("U") >= 0;
    CommPoly img = substitute_monomial(p, "la", has_u ? "la^-1*U" : "la^-1");
    img = substitute_monomial(img, "mu", has_u ? "mu^-1*U" : "mu^-1");
    rep.image = normalize_units(img).poly;
    rep.symmetric = equal_up_to_units(p, img);
    if (mirror) {
        CommPoly m = substitute_monomial(p, "U", "U^-1");
        m = substitute_monomial(m, "la", has_u ? "la*U^-1" : "la");
        m = substitute_monomial(m, "mu", "mu^-1");
        rep.mirror = equal_up_to_units(mirror->with_vars(p.vars()), m);
    }
    return rep;
}

CommPoly homfly_specialization(const CommPoly &homfly) {
    int a = homfly.index_of("a");
    CommPoly out(std::vector<std::string>{"U"});
    for (const auto &[e, c] : homfly.terms()) {
        for (int v = 0; v < homfly.nvars(); ++v)
            if (v != a && homfly.vars()[v] != "q" && e[v] != 0)
                throw DomainError("HOMFLY-PT input uses variable " + homfly.vars()[v] +
                                  " other than a, q");
        int ea = a >= 0 ? e[a] : 0;
        if (ea % 2 != 0)
            throw DomainError("HOMFLY-PT input has an odd power of a");
        out.add_term({-ea / 2}, c);
    }
    return out;
}

HomflyReport homfly_check(const CommPoly &p, const CommPoly &homfly) {
    const std::vector<std::string> vars = {"la", "mu", "U"};
    CommPoly P = normalize_units(p.with_vars(vars)).poly;
    HomflyReport rep;
    rep.expected = homfly_specialization(homfly);
    auto coeffs = P.coeffs_in(0);
    CommPoly zero(vars);
    CommPoly c0 = coeffs.size() > 0 ? coeffs[0] : zero;
    CommPoly c1 = coeffs.size() > 1 ? coeffs[1] : zero;
    CommPoly U = CommPoly::variable(vars, "U");
    if (!c0.substitute(1, U).is_zero()) {
        rep.message = "Aug(0, U, U) is not zero";
        return rep;
    }
    CommPoly dc0 = c0.derivative(1).substitute(1, U);
    if (dc0.is_zero())
        throw DomainError("degenerate expansion: d/dmu of the constant coefficient vanishes at mu = U");
    auto f = exact_divide(-c1.substitute(1, U), dc0);
    if (!f)
        throw DomainError("-c1(U,U) is not divisible by d/dmu c0(U,U)");
    rep.f = f->with_vars({"U"});
    auto q = exact_divide(*f, U - CommPoly::constant(vars, 1));
    if (!q) {
        rep.message = "f(U) is not divisible by U - 1";
        return rep;
    }
    rep.quotient = q->with_vars({"U"});
    rep.pass = rep.quotient == rep.expected;
    rep.message = rep.pass ? "match" : "f(U)/(U-1) differs from the HOMFLY-PT specialization";
    return rep;
}

} // namespace kch

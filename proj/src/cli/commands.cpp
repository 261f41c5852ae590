#include "commands.hpp"

#include "kch/augment/augment.hpp"
#include "kch/augpoly/augpoly.hpp"
#include "kch/augpoly/polyalg.hpp"
#include "kch/braid/phi.hpp"
#include "kch/dga/dga_json.hpp"
#include "kch/errors.hpp"
#include "kch/linhom/linhom.hpp"
#include "kch/ncalg/targets.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace kch::cli {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::pair<std::string, std::string>> split_assignments(const std::string &text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (trim(item).empty())
            continue;
        size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw DomainError("augmentation entry '" + trim(item) + "' is not name=value");
        std::string name = trim(item.substr(0, eq)), value = trim(item.substr(eq + 1));
        if (name.empty() || value.empty())
            throw DomainError("augmentation entry '" + trim(item) + "' is not name=value");
        out.emplace_back(name, value);
    }
    return out;
}

BigInt parse_bigint(const std::string &s) {
    std::string t = s;
    if (!t.empty() && t[0] == '+')
        t = t.substr(1);
    bool ok = !t.empty();
    for (size_t i = 0; i < t.size(); ++i)
        ok = ok && (std::isdigit(static_cast<unsigned char>(t[i])) || (i == 0 && t[i] == '-' && t.size() > 1));
    if (!ok)
        throw DomainError("'" + s + "' is not an integer");
    return BigInt(t);
}

BigRational parse_rational(const std::string &s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos)
        return BigRational(parse_bigint(s));
    BigInt den = parse_bigint(trim(s.substr(slash + 1)));
    if (den == 0)
        throw DomainError("zero denominator in '" + s + "'");
    return BigRational(parse_bigint(trim(s.substr(0, slash))), den);
}

template <class R, class Parse>
json linhom_over(const DGA &d, const R &ring, const std::string &aug, Parse parse) {
    Augmentation<R> eps{ring, {}, {}};
    for (const Letter &g : d.generators_of_degree(0))
        eps.chords[g] = ring.zero();
    for (const auto &[name, text] : split_assignments(aug)) {
        auto value = parse(text);
        if (d.ring->index_of(name) >= 0) {
            eps.vars[name] = value;
            continue;
        }
        Letter l;
        if (!parse_letter(name, l) || !eps.chords.count(l))
            throw DomainError("'" + name + "' is neither a ring variable nor a degree-0 generator");
        eps.chords[l] = value;
    }
    AugVerdict<R> verdict = is_augmentation(d, eps);
    if (!verdict.ok)
        throw DomainError("not an augmentation: d " + letter_name(verdict.residues[0].first) +
                          " evaluates to " + ring.str(verdict.residues[0].second));
    HomologyResult<R> h = homology(linearized_complex(d, eps));
    json j;
    j["coeff"] = R::name;
    json values = json::object();
    for (const auto &[v, x] : eps.vars)
        values[v] = ring.str(x);
    for (const auto &[l, x] : eps.chords)
        values[letter_name(l)] = ring.str(x);
    j["augmentation"] = values;
    j["groups"] = json::array();
    for (size_t k = 0; k < h.groups.size(); ++k) {
        json t = json::array();
        for (const auto &f : h.groups[k].torsion)
            t.push_back(ring.str(f));
        j["groups"].push_back({{"degree", k},
                               {"free_rank", h.groups[k].free_rank},
                               {"torsion", t},
                               {"group", group_string(ring, h.groups[k])}});
    }
    return j;
}

int64_t checked_prime(const json &input) {
    int64_t p = input.value("prime", int64_t{3});
    if (p < 2 || p >= (int64_t{1} << 31))
        throw DomainError("prime " + std::to_string(p) + " out of range");
    for (int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw DomainError(std::to_string(p) + " is not prime");
    return p;
}

json poly_list(const std::vector<CommPoly> &ps) {
    json a = json::array();
    for (const auto &p : ps)
        a.push_back(p.to_string());
    return a;
}

} // namespace

BraidWord request_braid(const json &input) {
    std::optional<int> n;
    if (input.contains("strands") && !input["strands"].is_null())
        n = input["strands"].get<int>();
    return parse_braid(input.value("braid", std::string()), n);
}

DgaMode request_mode(const json &input) {
    DgaMode m;
    m.variant = parse_variant(input.value("mode", std::string("topological")));
    if (input.value("noncommutative", false))
        m.algebra = AlgebraMode::FullyNoncommutative;
    std::string star = input.value("star", std::string("default"));
    if (star == "0")
        m.star = StarStrand::Low0;
    else if (star == "n+1")
        m.star = StarStrand::HighNPlus1;
    else if (star != "default")
        throw DomainError("--star must be 0 or n+1, got '" + star + "'");
    return m;
}

json cmd_dga(const json &input) {
    return dga_to_json(build_dga(request_braid(input), request_mode(input)));
}

json cmd_d2_check(const json &input) {
    DGA d = build_dga(request_braid(input), request_mode(input));
    D2Report r = check_d_squared(d);
    json j;
    j["pass"] = r.pass;
    j["checked"] = r.checked;
    j["generators"] = d.generators.size();
    if (r.offender)
        j["offender"] = letter_name(*r.offender);
    if (r.residue)
        j["residue"] = r.residue->to_string();
    return j;
}

json cmd_aug_count(const json &input, bool enumerate) {
    BraidWord b = request_braid(input);
    DgaMode m = request_mode(input);
    SearchOptions opt;
    opt.prime = checked_prime(input);
    opt.max_chord_vars = input.value("max_chord_vars", opt.max_chord_vars);
    DGA d = build_dga(b, m);
    json j;
    j["mode"] = variant_name(d.mode.variant);
    j["prime"] = opt.prime;
    if (!enumerate) {
        j["count"] = count_augmentations(d, opt);
        return j;
    }
    AugSolutions s = enumerate_augmentations(d, opt);
    j["count"] = s.points.size();
    j["variables"] = s.vars;
    json sols = json::array();
    for (const auto &pt : s.points) {
        json o = json::object();
        for (size_t k = 0; k < pt.size(); ++k)
            o[s.vars[k]] = pt[k];
        sols.push_back(o);
    }
    j["solutions"] = sols;
    return j;
}

json cmd_linhom(const json &input) {
    DGA d = build_dga(request_braid(input), request_mode(input));
    std::string coeff = input.value("coeff", std::string("Z"));
    std::string aug = input.value("aug", std::string());
    if (coeff == "Z")
        return linhom_over(d, IntegerRing{}, aug, parse_bigint);
    if (coeff == "Fp") {
        PrimeField F(checked_prime(input));
        json j = linhom_over(d, F, aug, [&](const std::string &s) {
            return F.from_int(parse_bigint(s));
        });
        j["prime"] = F.p;
        return j;
    }
    if (coeff == "Q")
        return linhom_over(d, RationalField{}, aug, parse_rational);
    if (coeff == "Laurent")
        return linhom_over(d, LaurentQRing{}, aug,
                           [](const std::string &s) { return parse_qlaurent(s, "t"); });
    throw DomainError("unknown coefficient ring '" + coeff + "' (Z, Fp, Q or Laurent)");
}

namespace {

json elimination_json(const EliminationResult &r, const std::optional<CommPoly> &homfly) {
    json j;
    j["polynomial"] = r.candidate.to_string();
    j["variables"] = r.candidate.vars();
    j["method"] = method_name(r.method);
    j["certificate"] = r.certificate;
    j["uncertified_factors"] = poly_list(r.uncertified);
    j["normalization"] = {{"squarefree", r.squarefree_applied},
                          {"content_removed", r.content_removed},
                          {"trivial_factors_removed", r.trivial_factors_removed}};
    j["primes_checked"] = r.primes_checked;
    j["points_checked"] = r.points_checked;
    j["symmetric"] = check_symmetries(r.candidate).symmetric;
    if (homfly) {
        HomflyReport h = homfly_check(r.candidate, *homfly);
        j["homfly"] = {{"pass", h.pass},
                       {"f", h.f.to_string()},
                       {"quotient", h.quotient.to_string()},
                       {"expected", h.expected.to_string()},
                       {"message", h.message}};
    }
    return j;
}

std::optional<CommPoly> request_homfly(const json &input) {
    if (!input.contains("homfly"))
        return std::nullopt;
    return parse_commpoly(input["homfly"].get<std::string>(), {"a", "q"});
}

AugPolyOptions request_augpoly(const json &input) {
    AugPolyOptions opt;
    opt.method = parse_method(input.value("method", std::string("resultant")));
    return opt;
}

} // namespace

json cmd_augpoly(const json &input) {
    BraidWord b = request_braid(input);
    AugPolyOptions opt = request_augpoly(input);
    bool two = input.value("two_var", false);
    auto homfly = request_homfly(input);
    if (two && homfly)
        throw DomainError("the HOMFLY-PT check needs the three-variable polynomial");
    EliminationResult r = two ? two_variable_augpoly(b, opt) : augmentation_polynomial(b, opt);
    return elimination_json(r, homfly);
}

json cmd_homfly_check(const json &input) {
    auto homfly = request_homfly(input);
    if (!homfly)
        throw DomainError("homfly-check needs --homfly-file");
    EliminationResult r = augmentation_polynomial(request_braid(input), request_augpoly(input));
    HomflyReport h = homfly_check(r.candidate, *homfly);
    return {{"pass", h.pass},
            {"polynomial", r.candidate.to_string()},
            {"homfly", homfly->to_string()},
            {"f", h.f.to_string()},
            {"quotient", h.quotient.to_string()},
            {"expected", h.expected.to_string()},
            {"message", h.message}};
}

json cmd_compare_transverse(const json &input) {
    std::vector<BraidWord> bs;
    for (const auto &e : input["braids"])
        bs.push_back(parse_braid(e["word"].get<std::string>(), e["strands"].get<int>()));
    if (bs.size() != 2)
        throw DomainError("compare-transverse needs exactly two braids");
    return to_json(compare_transverse(bs[0], bs[1], checked_prime(input)));
}

bool phi_is_identity(const BraidWord &b) {
    RingPtr ring = make_ring({});
    int n = b.strands();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j)
                continue;
            NCPoly a = NCPoly::letter(ring, Letter::a(i, j));
            if (!(phi_apply(b, a) == a))
                return false;
        }
    return true;
}

bool result_failed(const std::string &command, const json &result) {
    if (command == "d2-check" || command == "homfly-check")
        return !result.value("pass", false);
    if (command == "augpoly" && result.contains("homfly"))
        return !result["homfly"].value("pass", false);
    if (command == "examples")
        return result.value("failed", 0) > 0;
    return false;
}

} // namespace kch::cli

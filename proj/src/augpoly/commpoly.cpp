#include "kch/augpoly/commpoly.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <ostream>
#include <set>

namespace kch {

CommPoly CommPoly::constant(std::vector<std::string> vars, const BigInt &c) {
    CommPoly p(std::move(vars));
    p.add_term(Exps(p.vars_.size(), 0), c);
    return p;
}

CommPoly CommPoly::variable(std::vector<std::string> vars, const std::string &name, int power) {
    CommPoly p(std::move(vars));
    int v = p.index_of(name);
    if (v < 0)
        throw DomainError("unknown variable '" + name + "'");
    Exps e(p.vars_.size(), 0);
    e[v] = power;
    p.add_term(e, 1);
    return p;
}

CommPoly CommPoly::monomial(std::vector<std::string> vars, Exps e, const BigInt &c) {
    CommPoly p(std::move(vars));
    if (e.size() != p.vars_.size())
        throw DomainError("exponent vector has the wrong length");
    p.add_term(e, c);
    return p;
}

int CommPoly::index_of(std::string_view name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    return -1;
}

bool CommPoly::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const Exps &e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void CommPoly::add_term(const Exps &e, const BigInt &c) {
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

CommPoly CommPoly::operator-() const {
    CommPoly r = *this;
    for (auto &[e, c] : r.terms_)
        c = -c;
    return r;
}

namespace {

void check_vars(const CommPoly &a, const CommPoly &b) {
    if (a.vars() != b.vars())
        throw DomainError("polynomials over different variable lists");
}

} // namespace

CommPoly &CommPoly::operator+=(const CommPoly &o) {
    check_vars(*this, o);
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

CommPoly &CommPoly::operator-=(const CommPoly &o) {
    check_vars(*this, o);
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

CommPoly &CommPoly::operator*=(const BigInt &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, x] : terms_)
        x *= c;
    return *this;
}

CommPoly operator*(const CommPoly &a, const CommPoly &b) {
    check_vars(a, b);
    CommPoly r(a.vars_);
    Exps e(a.vars_.size());
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

CommPoly CommPoly::pow(unsigned e) const {
    CommPoly r = constant(vars_, 1), base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return r;
}

int CommPoly::degree(int v) const {
    int d = INT_MIN;
    for (const auto &[e, c] : terms_)
        d = std::max(d, e[v]);
    return d;
}

int CommPoly::min_degree(int v) const {
    int d = INT_MAX;
    for (const auto &[e, c] : terms_)
        d = std::min(d, e[v]);
    return d;
}

int CommPoly::total_degree() const {
    int d = INT_MIN;
    for (const auto &[e, c] : terms_) {
        int s = 0;
        for (int x : e)
            s += x;
        d = std::max(d, s);
    }
    return d;
}

bool CommPoly::mentions(int v) const {
    for (const auto &[e, c] : terms_)
        if (e[v] != 0)
            return true;
    return false;
}

Exps CommPoly::min_exponents() const {
    Exps m(vars_.size(), 0);
    bool first = true;
    for (const auto &[e, c] : terms_) {
        for (size_t i = 0; i < m.size(); ++i)
            m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

std::vector<CommPoly> CommPoly::coeffs_in(int v) const {
    if (is_zero())
        return {};
    if (min_degree(v) < 0)
        throw DomainError("negative power of " + vars_[v] + " in coefficient extraction");
    std::vector<CommPoly> out(degree(v) + 1, CommPoly(vars_));
    for (const auto &[e, c] : terms_) {
        Exps f = e;
        f[v] = 0;
        out[e[v]].add_term(f, c);
    }
    return out;
}

CommPoly CommPoly::from_coeffs(std::vector<std::string> vars, int v,
                               const std::vector<CommPoly> &coeffs) {
    CommPoly r(std::move(vars));
    for (size_t k = 0; k < coeffs.size(); ++k)
        for (const auto &[e, c] : coeffs[k].terms_) {
            Exps f = e;
            f[v] += static_cast<int>(k);
            r.add_term(f, c);
        }
    return r;
}

CommPoly CommPoly::derivative(int v) const {
    CommPoly r(vars_);
    for (const auto &[e, c] : terms_)
        if (e[v] != 0) {
            Exps f = e;
            --f[v];
            r.add_term(f, c * e[v]);
        }
    return r;
}

CommPoly CommPoly::substitute(int v, const CommPoly &value) const {
    check_vars(*this, value);
    std::map<int, CommPoly> powers;
    std::optional<CommPoly> inverse;
    if (min_degree(v) < 0 && !is_zero()) {
        if (value.size() != 1)
            throw DomainError("negative power of " + vars_[v] + " needs a monomial value");
        const auto &[e, c] = *value.terms_.begin();
        if (c != 1 && c != -1)
            throw DomainError("negative power of " + vars_[v] + " needs a unit value");
        Exps f = e;
        for (int &x : f)
            x = -x;
        inverse = monomial(vars_, f, c);
    }
    auto power = [&](int k) -> const CommPoly & {
        auto it = powers.find(k);
        if (it == powers.end())
            it = powers.emplace(k, k >= 0 ? value.pow(k) : inverse->pow(-k)).first;
        return it->second;
    };
    CommPoly r(vars_);
    for (const auto &[e, c] : terms_) {
        Exps f = e;
        f[v] = 0;
        r += monomial(vars_, f, c) * power(e[v]);
    }
    return r;
}

CommPoly CommPoly::shifted(const Exps &delta) const {
    CommPoly r(vars_);
    for (const auto &[e, c] : terms_) {
        Exps f = e;
        for (size_t i = 0; i < f.size(); ++i)
            f[i] += delta[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

BigInt CommPoly::content() const {
    BigInt g = 0;
    for (const auto &[e, c] : terms_)
        g = big_gcd(g, c);
    return g;
}

CommPoly CommPoly::divided_by(const BigInt &c) const {
    CommPoly r = *this;
    for (auto &[e, x] : r.terms_) {
        if (x % c != 0)
            throw InternalError("inexact integer division of a polynomial");
        x /= c;
    }
    return r;
}

CommPoly CommPoly::with_vars(const std::vector<std::string> &vars) const {
    std::vector<int> map(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = 0; j < vars.size(); ++j)
            if (vars[j] == vars_[i])
                map[i] = static_cast<int>(j);
    CommPoly r(vars);
    for (const auto &[e, c] : terms_) {
        Exps f(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (map[i] < 0)
                throw DomainError("variable " + vars_[i] + " missing from target variable list");
            f[map[i]] = e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

const std::pair<const Exps, BigInt> &CommPoly::leading() const {
    if (terms_.empty())
        throw DomainError("zero polynomial has no leading term");
    return *terms_.rbegin();
}

std::string CommPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        BigInt a = c < 0 ? BigInt(-c) : c;
        std::string body = mono.empty() ? a.str() : (a == 1 ? mono : a.str() + "*" + mono);
        if (first)
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const CommPoly &p) { return os << p.to_string(); }

namespace {

class CommParser {
  public:
    CommParser(std::string_view text, const std::vector<std::string> &vars)
        : text_(text), vars_(vars) {}

    CommPoly parse() {
        CommPoly r = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw DomainError("cannot parse polynomial '" + std::string(text_) + "': " + msg +
                          " at offset " + std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_primary() {
        skip_ws();
        if (pos_ >= text_.size())
            return false;
        char c = text_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
    CommPoly expr() {
        CommPoly r(vars_);
        bool neg = accept('-');
        if (!neg)
            accept('+');
        CommPoly t = term();
        r = neg ? -t : t;
        while (true) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                break;
        }
        return r;
    }
    CommPoly term() {
        CommPoly r = factor();
        while (true) {
            if (accept('*'))
                r = r * factor();
            else if (at_primary())
                r = r * factor();
            else
                break;
        }
        return r;
    }
    int integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_ || pos_ - start > 6)
            fail("expected a small integer exponent");
        int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }
    CommPoly factor() {
        if (accept('-'))
            return -factor();
        skip_ws();
        bool is_var = pos_ < text_.size() && !std::isdigit(static_cast<unsigned char>(text_[pos_])) &&
                      text_[pos_] != '(';
        CommPoly base = primary();
        if (accept('^')) {
            int e = integer();
            if (e >= 0) {
                base = base.pow(static_cast<unsigned>(e));
            } else if (is_var) {
                Exps f = base.leading().first;
                for (int &x : f)
                    x *= e;
                base = CommPoly::monomial(vars_, f, 1);
            } else {
                fail("negative exponent on a non-variable");
            }
        }
        return base;
    }
    CommPoly primary() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            CommPoly r = expr();
            if (!accept(')'))
                fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return CommPoly::constant(vars_, BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            fail("unexpected character");
        std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            fail("unknown variable '" + name + "'");
        return CommPoly::variable(vars_, name);
    }

    std::string_view text_;
    const std::vector<std::string> &vars_;
    size_t pos_ = 0;
};

} // namespace

CommPoly parse_commpoly(std::string_view text, const std::vector<std::string> &vars) {
    return CommParser(text, vars).parse();
}

std::vector<std::string> abelian_vars(const RingPtr &ring, const std::vector<NCPoly> &polys) {
    std::vector<std::string> vars = ring->vars;
    std::set<std::string> homology;
    std::set<Letter> chords;
    for (const NCPoly &p : polys)
        for (const auto &[w, c] : p.terms())
            for (const Letter &l : w) {
                if (is_homology(l)) {
                    Letter base = l;
                    base.exp = 1;
                    homology.insert(letter_name(base));
                } else if (letter_degree(l) == 0) {
                    chords.insert(l);
                }
            }
    for (const auto &h : homology)
        if (std::find(vars.begin(), vars.end(), h) == vars.end())
            vars.push_back(h);
    for (const Letter &l : chords)
        vars.push_back(letter_name(l));
    return vars;
}

CommPoly abelianize(const NCPoly &p, const std::vector<std::string> &vars) {
    CommPoly r(vars);
    const auto &rv = p.ring()->vars;
    std::vector<int> coeff_index(rv.size(), -1);
    for (size_t i = 0; i < rv.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), rv[i]);
        if (it == vars.end())
            throw DomainError("variable " + rv[i] + " missing from abelianization");
        coeff_index[i] = static_cast<int>(it - vars.begin());
    }
    for (const auto &[w, c] : p.terms()) {
        Exps base(vars.size(), 0);
        for (const Letter &l : w) {
            Letter key = l;
            int power = 1;
            if (is_homology(l)) {
                key.exp = 1;
                power = l.exp;
            } else if (letter_degree(l) != 0) {
                throw DomainError("cannot abelianize " + letter_name(l) + " of nonzero degree");
            }
            auto it = std::find(vars.begin(), vars.end(), letter_name(key));
            if (it == vars.end())
                throw DomainError("generator " + letter_name(key) + " missing from abelianization");
            base[it - vars.begin()] += power;
        }
        for (const auto &[m, k] : c.terms()) {
            Exps e = base;
            for (size_t i = 0; i < rv.size(); ++i)
                e[coeff_index[i]] += m.exp[i];
            r.add_term(e, k);
        }
    }
    return r;
}

} // namespace kch

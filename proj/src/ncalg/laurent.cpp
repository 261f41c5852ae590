#include "kch/ncalg/laurent.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace kch {

Laurent::Laurent(const BigInt &c) {
    if (c != 0)
        terms_.emplace_back(Monomial{}, c);
}

Laurent Laurent::monomial(const Monomial &m, const BigInt &c) {
    Laurent r;
    if (c != 0)
        r.terms_.emplace_back(m, c);
    return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
    Laurent r;
    r.terms_ = std::move(terms);
    r.canonicalize();
    return r;
}

void Laurent::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term &a, const Term &b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto &t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_[0].first.is_one() &&
           terms_[0].second == 1;
}

bool Laurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

BigInt Laurent::constant_value() const {
    for (const auto &[m, c] : terms_)
        if (m.is_one())
            return c;
    return 0;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto &t : r.terms_)
        t.second = -t.second;
    return r;
}

Laurent &Laurent::operator+=(const Laurent &o) {
    if (o.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            merged.push_back(std::move(*i++));
        } else if (i == terms_.end() || j->first < i->first) {
            merged.push_back(*j++);
        } else {
            BigInt c = i->second + j->second;
            if (c != 0)
                merged.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Laurent &Laurent::operator-=(const Laurent &o) { return *this += -o; }

Laurent operator*(const Laurent &a, const Laurent &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) {
        Laurent r = b;
        for (auto &t : r.terms_)
            t.second *= a.terms_[0].second;
        return r;
    }
    if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) {
        Laurent r = a;
        for (auto &t : r.terms_)
            t.second *= b.terms_[0].second;
        return r;
    }
    std::vector<Laurent::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            prod.emplace_back(ma * mb, ca * cb);
    return Laurent::from_terms(std::move(prod));
}

std::optional<Laurent> Laurent::unit_inverse() const {
    if (terms_.size() != 1)
        return std::nullopt;
    const auto &[m, c] = terms_[0];
    if (c != 1 && c != -1)
        return std::nullopt;
    return monomial(m.inverse(), c);
}

Laurent Laurent::pow(int e) const {
    if (e < 0) {
        auto inv = unit_inverse();
        if (!inv)
            throw DomainError("negative power of a non-unit coefficient");
        return inv->pow(-e);
    }
    Laurent result(1);
    Laurent base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

int Laurent::min_exponent(int var) const {
    int m = std::numeric_limits<int>::max();
    for (const auto &t : terms_)
        m = std::min<int>(m, t.first.exp[var]);
    return terms_.empty() ? 0 : m;
}

int Laurent::max_exponent(int var) const {
    int m = std::numeric_limits<int>::min();
    for (const auto &t : terms_)
        m = std::max<int>(m, t.first.exp[var]);
    return terms_.empty() ? 0 : m;
}

bool Laurent::mentions(int var) const {
    for (const auto &t : terms_)
        if (t.first.exp[var] != 0)
            return true;
    return false;
}

Laurent Laurent::substitute(int var, const Laurent &value) const {
    if (!mentions(var))
        return *this;
    Laurent result;
    for (const auto &[m, c] : terms_) {
        Monomial rest = m;
        int e = rest.exp[var];
        rest.exp[var] = 0;
        if (e < 0 && !value.unit_inverse())
            throw DomainError("cannot substitute a non-unit for a variable "
                              "occurring with a negative exponent");
        result += monomial(rest, c) * value.pow(e);
    }
    return result;
}

Laurent Laurent::reindex(const std::vector<int> &index_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &[m, c] : terms_) {
        Monomial n;
        for (int v = 0; v < kMaxVars; ++v) {
            if (m.exp[v] == 0)
                continue;
            int target = v < static_cast<int>(index_map.size()) ? index_map[v] : -1;
            if (target < 0)
                throw InternalError("reindex: variable dropped while still in use");
            n.exp[target] = static_cast<int16_t>(n.exp[target] + m.exp[v]);
        }
        out.emplace_back(n, c);
    }
    return from_terms(std::move(out));
}

std::string monomial_to_string(const Monomial &m,
                               const std::vector<std::string> &names) {
    std::string s;
    for (size_t v = 0; v < names.size(); ++v) {
        int e = m.exp[v];
        if (e == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += names[v];
        if (e != 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

std::string Laurent::to_string(const std::vector<std::string> &names) const {
    if (terms_.empty())
        return "0";
    // Graded for display: total degree ascending, then variables in ring
    // order (earlier variables first).
    std::vector<const Term *> order;
    for (const auto &t : terms_)
        order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term *a, const Term *b) {
        int da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db)
            return da < db;
        return b->first < a->first;
    });
    std::string s;
    bool first = true;
    for (const Term *t : order) {
        BigInt c = t->second;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string mono = monomial_to_string(t->first, names);
        if (mono.empty()) {
            s += c.str();
        } else {
            if (c != 1)
                s += c.str() + "*";
            s += mono;
        }
    }
    return s;
}

namespace {

class LaurentParser {
  public:
    LaurentParser(std::string_view text, const std::vector<std::string> &names)
        : text_(text), names_(names) {}

    Laurent parse() {
        Laurent r = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw DomainError("cannot parse coefficient '" + std::string(text_) +
                          "': " + msg + " at offset " + std::to_string(pos_));
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
    Laurent expr() {
        Laurent r;
        bool neg = false;
        skip_ws();
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Laurent t = term();
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
    Laurent term() {
        Laurent r = factor();
        while (accept('*'))
            r *= factor();
        return r;
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected integer exponent");
        long v = std::stol(std::string(text_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }
    Laurent factor() {
        if (accept('-'))
            return -factor();
        Laurent base = primary();
        if (accept('^'))
            base = base.pow(static_cast<int>(integer()));
        return base;
    }
    Laurent primary() {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Laurent r = expr();
            if (!accept(')'))
                fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Laurent(BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name)
                    return Laurent::variable(static_cast<int>(i));
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    const std::vector<std::string> &names_;
    size_t pos_ = 0;
};

} // namespace

Laurent parse_laurent(std::string_view text, const std::vector<std::string> &names) {
    if (names.size() > static_cast<size_t>(kMaxVars))
        throw ConfigError("too many coefficient variables");
    return LaurentParser(text, names).parse();
}

} // namespace kch

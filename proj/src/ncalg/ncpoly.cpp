#include "kch/ncalg/ncpoly.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace kch {

namespace {

const char *kind_prefix(LetterKind k) {
    switch (k) {
    case LetterKind::A: return "a";
    case LetterKind::B: return "b";
    case LetterKind::C: return "c";
    case LetterKind::D: return "d";
    case LetterKind::E: return "e";
    case LetterKind::F: return "f";
    case LetterKind::Stab: return "s";
    case LetterKind::Lambda: return "la";
    case LetterKind::Mu: return "mu";
    case LetterKind::MuTilde: return "mt";
    }
    return "?";
}

bool read_uint(const std::string &s, size_t &pos, int &out) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (start == pos || pos - start > 3)
        return false;
    out = std::stoi(s.substr(start, pos - start));
    return true;
}

} // namespace

std::string letter_name(const Letter &l) {
    std::string s = kind_prefix(l.kind);
    if (is_chord(l)) {
        if (l.i < 10 && l.j < 10)
            s += std::to_string(l.i) + std::to_string(l.j);
        else
            s += std::to_string(l.i) + "_" + std::to_string(l.j);
        return s;
    }
    if (l.kind == LetterKind::Stab)
        return s + std::to_string(l.i) + "_" + std::to_string(l.j);
    s += std::to_string(l.i);
    if (l.exp != 1)
        s += "^" + std::to_string(l.exp);
    return s;
}

bool parse_letter(const std::string &text, Letter &out) {
    static const std::pair<const char *, LetterKind> prefixes[] = {
        {"la", LetterKind::Lambda}, {"mu", LetterKind::Mu},
        {"mt", LetterKind::MuTilde}, {"a", LetterKind::A},
        {"b", LetterKind::B},        {"c", LetterKind::C},
        {"d", LetterKind::D},        {"e", LetterKind::E},
        {"f", LetterKind::F},        {"s", LetterKind::Stab},
    };
    for (const auto &[prefix, kind] : prefixes) {
        std::string p = prefix;
        if (text.compare(0, p.size(), p) != 0)
            continue;
        std::string rest = text.substr(p.size());
        if (rest.empty() || !std::isdigit(static_cast<unsigned char>(rest[0])))
            continue;
        size_t pos = 0;
        Letter l;
        l.kind = kind;
        if (kind <= LetterKind::F) {
            int i = 0, j = 0;
            if (rest.find('_') == std::string::npos) {
                if (rest.size() != 2 || !std::isdigit(static_cast<unsigned char>(rest[1])))
                    return false;
                i = rest[0] - '0';
                j = rest[1] - '0';
            } else {
                if (!read_uint(rest, pos, i) || pos >= rest.size() || rest[pos] != '_')
                    return false;
                ++pos;
                if (!read_uint(rest, pos, j) || pos != rest.size())
                    return false;
            }
            if (i > 255 || j > 255)
                return false;
            out = Letter::chord(kind, i, j);
            return true;
        }
        int idx = 0;
        if (!read_uint(rest, pos, idx) || idx > 255)
            return false;
        if (kind == LetterKind::Stab) {
            int deg = 0;
            if (pos >= rest.size() || rest[pos] != '_')
                return false;
            ++pos;
            if (!read_uint(rest, pos, deg) || pos != rest.size() || deg > 255)
                return false;
            out = Letter::stab(idx, deg);
            return true;
        }
        int e = 1;
        if (pos < rest.size()) {
            if (rest[pos] != '^')
                return false;
            ++pos;
            bool neg = pos < rest.size() && rest[pos] == '-';
            if (neg)
                ++pos;
            if (!read_uint(rest, pos, e) || pos != rest.size())
                return false;
            if (neg)
                e = -e;
        }
        if (e == 0)
            return false;
        out = Letter::homology(kind, idx, e);
        return true;
    }
    return false;
}

int word_degree(const Word &w) {
    int d = 0;
    for (const Letter &l : w)
        d += letter_degree(l);
    return d;
}

bool word_less(const Word &a, const Word &b) {
    int da = word_degree(a), db = word_degree(b);
    if (da != db)
        return da < db;
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

int CoeffRing::index_of(std::string_view name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name)
            return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars, AlgebraMode mode,
                  bool u_nonnegative) {
    if (vars.size() > static_cast<size_t>(kMaxVars))
        throw ConfigError("too many coefficient variables");
    auto r = std::make_shared<CoeffRing>();
    r->vars = std::move(vars);
    r->mode = mode;
    r->u_nonnegative = u_nonnegative;
    return r;
}

// ---------------------------------------------------------------------------
// Words

namespace {

// Lambda_a and Mu_a form one abelian group per component; each mu-tilde
// strand letter is its own cyclic group.
bool same_group(const Letter &x, const Letter &y) {
    if (x.i != y.i)
        return false;
    bool lx = x.kind == LetterKind::Lambda || x.kind == LetterKind::Mu;
    bool ly = y.kind == LetterKind::Lambda || y.kind == LetterKind::Mu;
    if (lx && ly)
        return true;
    return x.kind == LetterKind::MuTilde && y.kind == LetterKind::MuTilde;
}

} // namespace

void append_letter(Word &w, const Letter &l, AlgebraMode mode) {
    if (!is_homology(l)) {
        w.push_back(l);
        return;
    }
    if (mode == AlgebraMode::Commuted)
        throw ConfigError("homology letter " + letter_name(l) +
                          " in a commuted-mode word");
    if (l.exp == 0)
        return;
    if (l.kind == LetterKind::MuTilde) {
        if (!w.empty() && w.back().kind == LetterKind::MuTilde && w.back().i == l.i) {
            int e = w.back().exp + l.exp;
            if (e == 0)
                w.pop_back();
            else
                w.back().exp = static_cast<int16_t>(e);
        } else {
            w.push_back(l);
        }
        return;
    }
    // Collect the trailing lambda/mu block of the same component.
    int la = 0, mu = 0;
    while (!w.empty() && is_homology(w.back()) && w.back().kind != LetterKind::MuTilde &&
           same_group(w.back(), l)) {
        (w.back().kind == LetterKind::Lambda ? la : mu) += w.back().exp;
        w.pop_back();
    }
    (l.kind == LetterKind::Lambda ? la : mu) += l.exp;
    if (la != 0)
        w.push_back(Letter::homology(LetterKind::Lambda, l.i, la));
    if (mu != 0)
        w.push_back(Letter::homology(LetterKind::Mu, l.i, mu));
}

Word concat(const Word &a, const Word &b, AlgebraMode mode) {
    Word r(a);
    r.reserve(a.size() + b.size());
    if (mode == AlgebraMode::Commuted) {
        r.insert(r.end(), b.begin(), b.end());
        return r;
    }
    for (const Letter &l : b)
        append_letter(r, l, mode);
    return r;
}

// ---------------------------------------------------------------------------
// NCPoly

NCPoly::NCPoly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_)
        throw ConfigError("polynomial without coefficient ring");
}

NCPoly NCPoly::constant(RingPtr ring, const Laurent &c) {
    NCPoly p(std::move(ring));
    if (!c.is_zero())
        p.terms_.emplace_back(Word{}, c);
    return p;
}

NCPoly NCPoly::letter(RingPtr ring, const Letter &l, const Laurent &c) {
    return word(std::move(ring), Word{l}, c);
}

NCPoly NCPoly::word(RingPtr ring, const Word &w, const Laurent &c) {
    NCPoly p(std::move(ring));
    if (c.is_zero())
        return p;
    Word canon;
    canon.reserve(w.size());
    for (const Letter &l : w)
        append_letter(canon, l, p.mode());
    p.terms_.emplace_back(std::move(canon), c);
    return p;
}

NCPoly NCPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    NCPolyBuilder b(std::move(ring));
    for (auto &[w, c] : terms)
        b.add(std::move(w), c);
    return std::move(b).build();
}

void NCPoly::check_same_ring(const NCPoly &o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
        throw ConfigError("polynomials over different coefficient rings");
}

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto &t : r.terms_)
        t.second = -t.second;
    return r;
}

NCPoly &NCPoly::operator+=(const NCPoly &o) {
    check_same_ring(o);
    if (o.terms_.empty())
        return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && word_less(i->first, j->first))) {
            merged.push_back(std::move(*i++));
        } else if (i == terms_.end() || word_less(j->first, i->first)) {
            merged.push_back(*j++);
        } else {
            Laurent c = i->second + j->second;
            if (!c.is_zero())
                merged.emplace_back(std::move(i->first), std::move(c));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

NCPoly &NCPoly::operator-=(const NCPoly &o) { return *this += -o; }

NCPoly operator*(const NCPoly &a, const NCPoly &b) { return nc_mul(a, b); }

NCPoly operator*(const Laurent &c, const NCPoly &p) {
    NCPoly r(p.ring_);
    if (c.is_zero())
        return r;
    r.terms_.reserve(p.terms_.size());
    for (const auto &[w, x] : p.terms_) {
        Laurent y = c * x;
        if (!y.is_zero())
            r.terms_.emplace_back(w, std::move(y));
    }
    return r;
}

bool NCPoly::operator==(const NCPoly &o) const {
    check_same_ring(o);
    return terms_ == o.terms_;
}

NCPoly::DegreeInfo NCPoly::degree_info() const {
    if (terms_.empty())
        return {DegreeKind::Zero, 0};
    int d = word_degree(terms_.front().first);
    for (const auto &t : terms_)
        if (word_degree(t.first) != d)
            return {DegreeKind::Mixed, 0};
    return {DegreeKind::Homogeneous, d};
}

std::optional<NCPoly> NCPoly::unit_inverse() const {
    if (terms_.size() != 1)
        return std::nullopt;
    const auto &[w, c] = terms_[0];
    auto ci = c.unit_inverse();
    if (!ci)
        return std::nullopt;
    Word inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (!is_homology(*it))
            return std::nullopt;
        Letter l = *it;
        l.exp = static_cast<int16_t>(-l.exp);
        inv.push_back(l);
    }
    return word(ring_, inv, *ci);
}

std::string NCPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const auto &[w, c] = terms_[k];
        if (k > 0)
            s += " + ";
        bool unit = c.is_one();
        if (!unit)
            s += "(" + c.to_string(ring_->vars) + ")";
        if (w.empty()) {
            if (unit)
                s += "1";
            continue;
        }
        for (size_t m = 0; m < w.size(); ++m) {
            if (m > 0 || !unit)
                s += ' ';
            s += letter_name(w[m]);
        }
    }
    return s;
}

void NCPolyBuilder::add(const Word &w, const Laurent &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = acc_.try_emplace(w, c);
    if (!inserted)
        it->second += c;
}

void NCPolyBuilder::add(Word &&w, const Laurent &c) {
    if (c.is_zero())
        return;
    auto it = acc_.find(w);
    if (it == acc_.end())
        acc_.emplace(std::move(w), c);
    else
        it->second += c;
}

void NCPolyBuilder::add(const NCPoly &p, const Laurent &scale) {
    if (!(*p.ring() == *ring_))
        throw ConfigError("polynomials over different coefficient rings");
    for (const auto &[w, c] : p.terms())
        add(w, scale.is_one() ? c : scale * c);
}

NCPoly NCPolyBuilder::build() && {
    std::vector<NCPoly::Term> terms;
    terms.reserve(acc_.size());
    for (auto &[w, c] : acc_)
        if (!c.is_zero())
            terms.emplace_back(w, std::move(c));
    std::sort(terms.begin(), terms.end(),
              [](const NCPoly::Term &a, const NCPoly::Term &b) {
                  return word_less(a.first, b.first);
              });
    acc_.clear();
    NCPoly p(ring_);
    // from_terms would recurse into the builder; install directly.
    return NCPoly::install(std::move(p), std::move(terms));
}

NCPoly nc_mul(const NCPoly &p, const NCPoly &q) {
    if (!(*p.ring() == *q.ring()))
        throw ConfigError("polynomials over different coefficient rings");
    if (p.is_zero() || q.is_zero())
        return NCPoly(p.ring());
    if (p.size() == 1 && p.terms()[0].first.empty())
        return p.terms()[0].second * q;
    if (q.size() == 1 && q.terms()[0].first.empty())
        return p * q.terms()[0].second;
    NCPolyBuilder b(p.ring());
    AlgebraMode mode = p.mode();
    for (const auto &[wp, cp] : p.terms())
        for (const auto &[wq, cq] : q.terms())
            b.add(concat(wp, wq, mode), cp * cq);
    return std::move(b).build();
}

NCPoly substitute(const NCPoly &p, const LetterMap &letters,
                  const RingPtr &target, const CoeffMap &coeffs) {
    constexpr size_t kMaxSubstitutionTerms = 2000000;
    NCPolyBuilder b(target);
    AlgebraMode mode = target->mode;
    std::vector<std::pair<Word, Laurent>> partial, next;
    for (const auto &[w, c] : p.terms()) {
        partial.clear();
        partial.emplace_back(Word{}, coeffs ? coeffs(c) : c);
        if (partial.back().second.is_zero())
            continue;
        for (const Letter &l : w) {
            std::optional<NCPoly> img = letters(l);
            if (!img) {
                for (auto &pw : partial)
                    append_letter(pw.first, l, mode);
                continue;
            }
            if (!(*img->ring() == *target))
                throw ConfigError("substitution image over the wrong ring");
            if (partial.size() * img->size() > kMaxSubstitutionTerms)
                throw ResourceLimit("substitution expands one word to more than " +
                                    std::to_string(kMaxSubstitutionTerms) + " terms");
            next.clear();
            for (const auto &[pw, pc] : partial)
                for (const auto &[iw, ic] : img->terms())
                    next.emplace_back(concat(pw, iw, mode), pc * ic);
            partial.swap(next);
            if (partial.empty())
                break;
        }
        for (auto &[pw, pc] : partial)
            b.add(std::move(pw), pc);
        if (b.size() > kMaxSubstitutionTerms)
            throw ResourceLimit("substitution result exceeds " +
                                std::to_string(kMaxSubstitutionTerms) + " terms");
    }
    return std::move(b).build();
}

NCPoly nc_derive(const NCPoly &p, const LetterMap &images, const DegreeMap &degrees) {
    NCPolyBuilder b(p.ring());
    AlgebraMode mode = p.mode();
    for (const auto &[w, c] : p.terms()) {
        int prefix_degree = 0;
        for (size_t k = 0; k < w.size(); ++k) {
            const Letter &l = w[k];
            int sign = (prefix_degree % 2 == 0) ? 1 : -1;
            prefix_degree += degrees(l);
            if (is_homology(l))
                continue;
            std::optional<NCPoly> img = images(l);
            if (!img)
                throw DomainError("no differential given for generator " + letter_name(l));
            if (img->is_zero())
                continue;
            Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            Word suffix(w.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.end());
            Laurent sc = sign > 0 ? c : -c;
            for (const auto &[iw, ic] : img->terms())
                b.add(concat(concat(prefix, iw, mode), suffix, mode), sc * ic);
        }
    }
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class NCPolyParser {
  public:
    NCPolyParser(std::string_view text, const RingPtr &ring) : text_(text), ring_(ring) {}

    NCPoly parse() {
        NCPolyBuilder b(ring_);
        skip_ws();
        if (pos_ == text_.size())
            fail("empty polynomial");
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            auto [w, c] = term();
            b.add(std::move(w), neg ? -c : c);
            skip_ws();
            if (pos_ == text_.size())
                break;
            if (peek() == '+')
                neg = false;
            else if (peek() == '-')
                neg = true;
            else
                fail("expected '+' or '-'");
            ++pos_;
        }
        return std::move(b).build();
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw DomainError("cannot parse polynomial '" + std::string(text_) + "': " + msg +
                          " at offset " + std::to_string(pos_));
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::pair<Word, Laurent> term() {
        Word w;
        Laurent c(1);
        bool any = false;
        while (true) {
            skip_ws();
            if (peek() == '*') {
                if (!any)
                    fail("dangling '*'");
                ++pos_;
                skip_ws();
            }
            char ch = peek();
            if (ch == '(') {
                size_t depth = 0, start = pos_;
                do {
                    if (pos_ >= text_.size())
                        fail("unbalanced parentheses");
                    if (text_[pos_] == '(')
                        ++depth;
                    else if (text_[pos_] == ')')
                        --depth;
                    ++pos_;
                } while (depth > 0);
                c *= parse_laurent(text_.substr(start, pos_ - start), ring_->vars);
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    ++pos_;
                c *= Laurent(BigInt(std::string(text_.substr(start, pos_ - start))));
            } else if (std::isalpha(static_cast<unsigned char>(ch))) {
                size_t start = pos_;
                while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                    ++pos_;
                std::string name(text_.substr(start, pos_ - start));
                int exponent = 1;
                bool has_exp = false;
                if (peek() == '^') {
                    ++pos_;
                    size_t es = pos_;
                    if (peek() == '-')
                        ++pos_;
                    while (std::isdigit(static_cast<unsigned char>(peek())))
                        ++pos_;
                    if (es == pos_ || (pos_ == es + 1 && text_[es] == '-'))
                        fail("expected exponent");
                    exponent = std::stoi(std::string(text_.substr(es, pos_ - es)));
                    has_exp = true;
                }
                int var = ring_->index_of(name);
                if (var >= 0) {
                    c *= Laurent::variable(var, exponent);
                } else {
                    Letter l;
                    if (!parse_letter(name, l))
                        fail("unknown symbol '" + name + "'");
                    if (is_homology(l)) {
                        l.exp = static_cast<int16_t>(l.exp * exponent);
                        append_letter(w, l, ring_->mode);
                    } else {
                        if (has_exp && exponent < 0)
                            fail("negative power of a chord generator");
                        for (int k = 0; k < exponent; ++k)
                            w.push_back(l);
                    }
                }
            } else {
                break;
            }
            any = true;
        }
        if (!any)
            fail("expected a term");
        return {std::move(w), std::move(c)};
    }

    std::string_view text_;
    const RingPtr &ring_;
    size_t pos_ = 0;
};

} // namespace

std::ostream &operator<<(std::ostream &os, const NCPoly &p) { return os << p.to_string(); }

NCPoly parse_ncpoly(std::string_view text, const RingPtr &ring) {
    return NCPolyParser(text, ring).parse();
}

} // namespace kch

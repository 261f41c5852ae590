#include "kch/ncalg/qlaurent.hpp"
#include "kch/errors.hpp"

#include <algorithm>
#include <cctype>

namespace kch {

QLaurent::QLaurent(const BigRational &c) {
    if (c != 0)
        coeffs_.push_back(c);
}

QLaurent QLaurent::monomial(const BigRational &c, int exponent) {
    QLaurent r(c);
    if (!r.is_zero())
        r.low_ = exponent;
    return r;
}

void QLaurent::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0)
        ++k;
    if (k > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
        low_ += static_cast<int>(k);
    }
    if (coeffs_.empty())
        low_ = 0;
}

BigRational QLaurent::coeff(int exponent) const {
    int k = exponent - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return 0;
    return coeffs_[k];
}

QLaurent QLaurent::operator-() const {
    QLaurent r = *this;
    for (auto &c : r.coeffs_)
        c = -c;
    return r;
}

QLaurent &QLaurent::operator+=(const QLaurent &o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    std::vector<BigRational> c(static_cast<size_t>(hi - lo + 1));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        c[low_ - lo + k] += coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k)
        c[o.low_ - lo + k] += o.coeffs_[k];
    coeffs_ = std::move(c);
    low_ = lo;
    trim();
    return *this;
}

QLaurent operator*(const QLaurent &a, const QLaurent &b) {
    QLaurent r;
    if (a.is_zero() || b.is_zero())
        return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.low_ = a.low_ + b.low_;
    r.trim();
    return r;
}

QLaurent QLaurent::shifted(int k) const {
    QLaurent r = *this;
    if (!r.is_zero())
        r.low_ += k;
    return r;
}

QLaurent QLaurent::pow(int e) const {
    if (e < 0) {
        if (!is_monomial())
            throw DomainError("negative power of a non-unit in Q[t^{±1}]");
        return monomial(1 / coeffs_[0], -low_).pow(-e);
    }
    QLaurent r(1), base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return r;
}

void QLaurent::divmod(const QLaurent &a, const QLaurent &b, QLaurent &q, QLaurent &r) {
    if (b.is_zero())
        throw DomainError("division by zero in Q[t^{±1}]");
    q = QLaurent();
    // Work with polynomial representatives a0 = a t^{-low a}, b0 = b t^{-low b}.
    QLaurent rem = a.shifted(-a.low_);
    QLaurent b0 = b.shifted(-b.low_);
    int db = b0.high();
    while (!rem.is_zero() && rem.high() >= db) {
        int shift = rem.high() - db;
        QLaurent t = monomial(rem.leading() / b0.leading(), shift);
        q += t;
        rem -= t * b0;
    }
    // a0 = q b0 + rem, so a = (q t^{la - lb}) b + rem t^{la}.
    int la = a.low_;
    q = q.shifted(la - b.low_);
    r = rem.shifted(la);
}

std::string QLaurent::to_string(const std::string &var) const {
    if (coeffs_.empty())
        return "0";
    std::string s;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        BigRational c = coeffs_[k];
        if (c == 0)
            continue;
        int e = low_ + static_cast<int>(k);
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mono;
        if (e != 0)
            mono = e == 1 ? var : var + "^" + std::to_string(e);
        if (mono.empty())
            s += c.str();
        else if (c == 1)
            s += mono;
        else
            s += c.str() + "*" + mono;
    }
    return s;
}

namespace {

class QParser {
  public:
    QParser(std::string_view text, const std::string &var) : text_(text), var_(var) {}

    QLaurent parse() {
        QLaurent r = expr();
        ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw DomainError("cannot parse '" + std::string(text_) + "': " + msg);
    }
    void ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool accept(char c) {
        ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    QLaurent expr() {
        bool neg = accept('-');
        if (!neg)
            accept('+');
        QLaurent r = term();
        if (neg)
            r = -r;
        while (true) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }
    QLaurent term() {
        QLaurent r = factor();
        while (true) {
            if (accept('*')) {
                r = r * factor();
            } else if (accept('/')) {
                BigInt d = number();
                if (d == 0)
                    fail("division by zero");
                r = r * QLaurent(BigRational(1, d));
            } else {
                return r;
            }
        }
    }
    BigInt number() {
        ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected number");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }
    int exponent() {
        ws();
        bool neg = accept('-');
        BigInt n = number();
        int e = static_cast<int>(n);
        return neg ? -e : e;
    }
    QLaurent factor() {
        if (accept('-'))
            return -factor();
        QLaurent base;
        ws();
        if (accept('(')) {
            base = expr();
            if (!accept(')'))
                fail("expected ')'");
        } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            base = QLaurent(BigRational(number()));
        } else if (text_.substr(pos_, var_.size()) == var_) {
            pos_ += var_.size();
            base = monomial(1, 1);
        } else {
            fail("unexpected symbol");
        }
        if (accept('^'))
            base = base.pow(exponent());
        return base;
    }
    static QLaurent monomial(int c, int e) { return QLaurent::monomial(BigRational(c), e); }

    std::string_view text_;
    const std::string &var_;
    size_t pos_ = 0;
};

} // namespace

QLaurent parse_qlaurent(std::string_view text, const std::string &var) {
    return QParser(text, var).parse();
}

} // namespace kch

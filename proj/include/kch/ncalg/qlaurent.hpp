#pragma once

#include "kch/ncalg/bigint.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kch {

/// Element of Q[t^{±1}], stored densely from the lowest nonzero exponent.
class QLaurent {
  public:
    QLaurent() = default;
    QLaurent(int c) : QLaurent(BigRational(c)) {}
    QLaurent(const BigRational &c);
    static QLaurent monomial(const BigRational &c, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monomial() const { return coeffs_.size() == 1; }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    // Exponent span; the Euclidean size for division.
    int span() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    BigRational coeff(int exponent) const;
    const BigRational &leading() const { return coeffs_.back(); }

    QLaurent operator-() const;
    QLaurent &operator+=(const QLaurent &o);
    QLaurent &operator-=(const QLaurent &o) { return *this += -o; }
    friend QLaurent operator+(QLaurent a, const QLaurent &b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent &b) { return a -= b; }
    friend QLaurent operator*(const QLaurent &a, const QLaurent &b);
    bool operator==(const QLaurent &o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }

    QLaurent shifted(int k) const;
    QLaurent pow(int e) const;

    /// a = q*b + r with span(r) < span(b); b must be nonzero.
    static void divmod(const QLaurent &a, const QLaurent &b, QLaurent &q, QLaurent &r);

    std::string to_string(const std::string &var = "t") const;

  private:
    void trim();
    std::vector<BigRational> coeffs_;
    int low_ = 0;
};

/// Parses e.g. "1 - t + t^2", "-t^-1", "3/2*t".
QLaurent parse_qlaurent(std::string_view text, const std::string &var = "t");

} // namespace kch

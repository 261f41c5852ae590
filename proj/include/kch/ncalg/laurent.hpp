#pragma once

#include "kch/ncalg/bigint.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kch {

// Upper bound on commuting coefficient variables (2 per link component plus U, V).
inline constexpr int kMaxVars = 16;

struct Monomial {
    std::array<int16_t, kMaxVars> exp{};

    auto operator<=>(const Monomial &) const = default;
    bool operator==(const Monomial &) const = default;

    int total_degree() const {
        int d = 0;
        for (auto e : exp)
            d += e;
        return d;
    }
    bool is_one() const {
        for (auto e : exp)
            if (e != 0)
                return false;
        return true;
    }
    Monomial operator*(const Monomial &o) const {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i)
            m.exp[i] = static_cast<int16_t>(exp[i] + o.exp[i]);
        return m;
    }
    Monomial inverse() const {
        Monomial m;
        for (int i = 0; i < kMaxVars; ++i)
            m.exp[i] = static_cast<int16_t>(-exp[i]);
        return m;
    }
    static Monomial var(int index, int power = 1) {
        Monomial m;
        m.exp[index] = static_cast<int16_t>(power);
        return m;
    }
};

/// Element of Z[x_1^{±1}, ..., x_k^{±1}]: a sparse map monomial -> integer.
///
/// Terms are kept sorted by monomial with no zero coefficients, so two equal
/// elements always have identical term vectors.
class Laurent {
  public:
    using Term = std::pair<Monomial, BigInt>;

    Laurent() = default;
    Laurent(int c) : Laurent(BigInt(c)) {}
    Laurent(const BigInt &c);

    static Laurent monomial(const Monomial &m, const BigInt &c = 1);
    static Laurent variable(int index, int power = 1) {
        return monomial(Monomial::var(index, power));
    }
    // Takes ownership of arbitrary (unsorted, possibly repeated) terms.
    static Laurent from_terms(std::vector<Term> terms);

    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Constant term's value; only meaningful when is_constant().
    BigInt constant_value() const;

    Laurent operator-() const;
    Laurent &operator+=(const Laurent &o);
    Laurent &operator-=(const Laurent &o);
    friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
    friend Laurent operator*(const Laurent &a, const Laurent &b);
    Laurent &operator*=(const Laurent &o) { return *this = *this * o; }
    bool operator==(const Laurent &o) const { return terms_ == o.terms_; }

    // Units of the Laurent ring are +-monomials.
    std::optional<Laurent> unit_inverse() const;
    Laurent pow(int e) const;

    int min_exponent(int var) const;
    int max_exponent(int var) const;
    bool mentions(int var) const;

    /// Replace variable `var` by `value`; the monomials of the result live in
    /// the same index space. Negative powers require `value` to be a unit.
    Laurent substitute(int var, const Laurent &value) const;

    /// Rewrites exponents through `index_map` (old var -> new var, or -1 if the
    /// variable must not occur).
    Laurent reindex(const std::vector<int> &index_map) const;

    std::string to_string(const std::vector<std::string> &names) const;

  private:
    void canonicalize();
    std::vector<Term> terms_;
};

/// Parses "U - la - mu + la*mu", "-2", "la^-1*U^2", "(1 - mu)*la" style input.
Laurent parse_laurent(std::string_view text,
                      const std::vector<std::string> &names);

std::string monomial_to_string(const Monomial &m,
                               const std::vector<std::string> &names);

} // namespace kch

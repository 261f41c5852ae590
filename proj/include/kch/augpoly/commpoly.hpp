#pragma once

#include "kch/ncalg/bigint.hpp"
#include "kch/ncalg/ncpoly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kch {

using Exps = std::vector<int>;

/// Sparse commutative polynomial over Z in named variables. Exponents may be
/// negative (Laurent) until cleared by normalize_units. Terms are keyed by
/// exponent vector; the map order is lex with the first variable most
/// significant.
class CommPoly {
  public:
    CommPoly() = default;
    explicit CommPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static CommPoly constant(std::vector<std::string> vars, const BigInt &c);
    static CommPoly variable(std::vector<std::string> vars, const std::string &name,
                             int power = 1);
    static CommPoly monomial(std::vector<std::string> vars, Exps e, const BigInt &c = 1);

    const std::vector<std::string> &vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int index_of(std::string_view name) const;
    const std::map<Exps, BigInt> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t size() const { return terms_.size(); }

    void add_term(const Exps &e, const BigInt &c);

    CommPoly operator-() const;
    CommPoly &operator+=(const CommPoly &o);
    CommPoly &operator-=(const CommPoly &o);
    CommPoly &operator*=(const BigInt &c);
    friend CommPoly operator+(CommPoly a, const CommPoly &b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly &b) { return a -= b; }
    friend CommPoly operator*(const CommPoly &a, const CommPoly &b);
    friend CommPoly operator*(CommPoly a, const BigInt &c) { return a *= c; }
    bool operator==(const CommPoly &o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    CommPoly pow(unsigned e) const;

    int degree(int v) const;     // -infinity (INT_MIN) for zero
    int min_degree(int v) const; // INT_MAX for zero
    int total_degree() const;
    bool mentions(int v) const;
    Exps min_exponents() const;

    /// Coefficients of v^0, v^1, ...; requires min_degree(v) >= 0.
    std::vector<CommPoly> coeffs_in(int v) const;
    static CommPoly from_coeffs(std::vector<std::string> vars, int v,
                                const std::vector<CommPoly> &coeffs);

    CommPoly derivative(int v) const;
    /// Replaces v by `value`. Negative powers of v need a monomial value.
    CommPoly substitute(int v, const CommPoly &value) const;
    /// Multiplies by the monomial x^delta.
    CommPoly shifted(const Exps &delta) const;
    BigInt content() const;
    CommPoly divided_by(const BigInt &c) const; // exact
    /// Same polynomial over another variable list; variables in use must appear.
    CommPoly with_vars(const std::vector<std::string> &vars) const;
    /// Largest term in lex order.
    const std::pair<const Exps, BigInt> &leading() const;

    std::string to_string() const;

  private:
    std::vector<std::string> vars_;
    std::map<Exps, BigInt> terms_;
};

std::ostream &operator<<(std::ostream &os, const CommPoly &p);

/// Parses "U - la*mu^2 + 3*(la - 1)^2"; unknown names raise DomainError.
CommPoly parse_commpoly(std::string_view text, const std::vector<std::string> &vars);

/// Ring variable names followed by the sorted degree-0 generator names that
/// occur in `polys`.
std::vector<std::string> abelian_vars(const RingPtr &ring, const std::vector<NCPoly> &polys);

/// Image in the commutative quotient. Letters of nonzero degree are rejected;
/// homology letters become their base ring variables ("la1", "mu2").
CommPoly abelianize(const NCPoly &p, const std::vector<std::string> &vars);

} // namespace kch

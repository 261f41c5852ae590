#pragma once

#include "kch/augpoly/commpoly.hpp"

#include <optional>

namespace kch {

/// q with f = q g, or nullopt. Laurent inputs are allowed.
std::optional<CommPoly> exact_divide(const CommPoly &f, const CommPoly &g);

/// Greatest common divisor over Z with positive lex-leading coefficient.
/// Inputs must have nonnegative exponents. Modular (dense interpolation
/// over word-size primes, checked by trial division over Z).
CommPoly poly_gcd(const CommPoly &f, const CommPoly &g);

/// Same result by primitive remainder sequences. Slow; kept as a cross-check.
CommPoly poly_gcd_prs(const CommPoly &f, const CommPoly &g);

/// gcd of the coefficients of f as a polynomial in v.
CommPoly content_in(const CommPoly &f, int v);

/// Determinant of the Sylvester matrix in v, so that res(x - a, x - b) = a - b.
CommPoly resultant(const CommPoly &f, const CommPoly &g, int v);

/// Product of the distinct irreducible factors, up to a constant.
CommPoly radical(const CommPoly &f);

struct UnitNormalized {
    CommPoly poly;
    Exps shift;  // monomial multiplied in
    BigInt scale; // the input was divided by this (sign included)
};

/// Clears Laurent denominators and the monomial gcd, divides out the content
/// and makes the lex-leading coefficient positive.
UnitNormalized normalize_units(const CommPoly &f);

/// f ≐ g: equal after normalize_units.
bool equal_up_to_units(const CommPoly &f, const CommPoly &g);

/// Value in F_p; variables with negative exponents must be nonzero.
int64_t eval_mod(const CommPoly &f, const std::vector<int64_t> &values, int64_t p);

} // namespace kch

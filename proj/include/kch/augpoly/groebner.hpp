#pragma once

#include "kch/augpoly/commpoly.hpp"

#include <vector>

namespace kch {

struct GroebnerOptions {
    int max_vars = 10;
    int max_basis = 400;
    long max_reductions = 200000;
    // eliminate(): grevlex on the eliminated block, then grevlex on the rest.
    // Off: pure lex with the eliminated variables first.
    bool block_order = true;
};

/// Reduced Groebner basis under lex order with the variables of the input in
/// their listed order (first most significant). Coefficients are kept as
/// primitive integer polynomials; the basis generates the same ideal over Q.
std::vector<CommPoly> groebner_lex(const std::vector<CommPoly> &ideal,
                                   const GroebnerOptions &opt = {});

/// Generators of the ideal intersected with Q[remaining variables]. The
/// variables in `elim` are moved first and dominate the monomial order;
/// results are over the remaining ones.
std::vector<CommPoly> eliminate(const std::vector<CommPoly> &ideal,
                                const std::vector<std::string> &elim,
                                const GroebnerOptions &opt = {});

} // namespace kch

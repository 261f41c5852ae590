#pragma once

#include "kch/augment/augment.hpp"
#include "kch/augpoly/commpoly.hpp"
#include "kch/augpoly/groebner.hpp"
#include "kch/braid/braid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kch {

enum class ElimMethod { Resultant, Groebner };

std::string method_name(ElimMethod m);
ElimMethod parse_method(const std::string &s);

struct AugPolyOptions {
    ElimMethod method = ElimMethod::Resultant;
    int max_chord_vars = 12;
    size_t max_terms = 20000; // per intermediate resultant
    GroebnerOptions groebner;
    // Finite-field cross-validation; empty disables it.
    std::vector<int64_t> check_primes = {3, 5};
};

struct EliminationResult {
    CommPoly candidate; // over (la, mu, U) or (la, mu)
    ElimMethod method = ElimMethod::Resultant;
    std::vector<std::string> certificate; // eliminated variables in order
    bool squarefree_applied = false;
    bool content_removed = false;
    bool trivial_factors_removed = false;
    // Factors (from splitting by partial contents) that no finite-field point
    // singles out; kept in the candidate.
    std::vector<CommPoly> uncertified;
    std::vector<int64_t> primes_checked;
    size_t points_checked = 0;
};

/// Abelianized equations of the topological DGA with Laurent denominators
/// cleared, optionally at U = 1. Variables: la, mu, [U,] then chords.
AugSystem elimination_system(const BraidWord &b, bool two_variable);

/// Chord variables in decreasing order of equation membership.
std::vector<std::string> elimination_order(const AugSystem &sys);

EliminationResult augmentation_polynomial(const BraidWord &b, const AugPolyOptions &opt = {});
EliminationResult two_variable_augpoly(const BraidWord &b, const AugPolyOptions &opt = {});

struct SymmetryReport {
    bool symmetric = false;         // P(la,mu,U) ≐ P(la^-1 U, mu^-1 U, U)
    std::optional<bool> mirror;     // Q(la,mu,U) ≐ P(la U^-1, mu^-1, U^-1)
    CommPoly image;                 // normalized P(la^-1 U, mu^-1 U, U)
};

/// Without a U variable the symmetry is read at U = 1.
SymmetryReport check_symmetries(const CommPoly &p, const std::optional<CommPoly> &mirror = {});

/// P_K(a, q) at a = U^{-1/2}, q = 1, as a polynomial in U.
CommPoly homfly_specialization(const CommPoly &homfly);

struct HomflyReport {
    bool pass = false;
    CommPoly f;        // -c1(U,U) / (d c0/d mu)(U,U)
    CommPoly quotient; // f / (U - 1)
    CommPoly expected; // specialized HOMFLY-PT polynomial
    std::string message;
};

/// `homfly` is P_K(a, q) over variables (a, q).
HomflyReport homfly_check(const CommPoly &p, const CommPoly &homfly);

} // namespace kch

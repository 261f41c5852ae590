#pragma once

#include "kch/braid/braid.hpp"
#include "kch/ncalg/ncmatrix.hpp"
#include "kch/ncalg/ncpoly.hpp"

#include <map>

namespace kch {

enum class StarStrand {
    Low0,       // the extra strand is strand 0
    HighNPlus1, // the extra strand is strand n+1
};

/// Image of a single letter under phi_{sigma_k^{sign}}, or nullopt when the
/// letter is fixed. Commuted rings use the plain formulas; fully
/// noncommutative rings use the mu-tilde decorated ones.
std::optional<NCPoly> phi_sigma_letter(int k, int sign, const Letter &l, const RingPtr &ring);

/// phi_B(p) = phi_{b_m}( ... phi_{b_1}(p)), i.e. braid letters act left to
/// right. Chord indices of p must lie in [0, width] and B must fit in
/// `width` strands.
NCPoly phi_apply(const BraidWord &b, const NCPoly &p, int width);
NCPoly phi_apply(const BraidWord &b, const NCPoly &p);

/// Images phi_B(a_ij) for all chords on strands 1..n together with the
/// strand `star` (0 or n+1; -1 for none).
std::map<Letter, NCPoly> phi_chord_images(const BraidWord &b, const RingPtr &ring, int star);

struct PhiMatrices {
    NCMatrix left;
    NCMatrix right;
};

/// Left/right coefficient matrices of phi_B on chords to and from the extra
/// strand. Results live over `ring`; for links (or fully noncommutative
/// rings) mu-tilde letters are projected to per-component meridians, which
/// in commuted rings are the coefficient variables `meridians[alpha]`.
PhiMatrices phi_matrices(const BraidWord &b, StarStrand star, const RingPtr &ring);

/// Decorated images over an auxiliary fully noncommutative ring, projected
/// to `ring`: mu-tilde_i becomes the meridian of the component of strand i.
std::map<Letter, NCPoly> projected_chord_images(const BraidWord &b, const RingPtr &ring,
                                                int star);

/// Name of the meridian of component `alpha` (1-based) in a commuted ring:
/// "mu" for knots, "mu<alpha>" for links.
std::string meridian_name(int alpha, int components);
std::string longitude_name(int alpha, int components);

} // namespace kch

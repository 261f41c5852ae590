#pragma once

#include "kch/braid/braid.hpp"
#include "kch/braid/phi.hpp"
#include "kch/ncalg/ncpoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kch {

enum class DgaVariant { Topological, TransverseU, TransverseUV, Hat };

struct DgaMode {
    DgaVariant variant = DgaVariant::Topological;
    AlgebraMode algebra = AlgebraMode::Commuted;
    // Unset: strand n+1 for commuted knots, strand 0 otherwise.
    std::optional<StarStrand> star;
};

std::string variant_name(DgaVariant v);
DgaVariant parse_variant(const std::string &s);

struct Generator {
    Letter letter;
    int degree = 0;
    std::string name() const { return letter_name(letter); }
};

class DGA {
  public:
    RingPtr ring;
    std::vector<Generator> generators;
    std::map<Letter, NCPoly> diff;
    BraidWord braid;
    DgaMode mode;       // star is always resolved
    ComponentMap comps; // of `braid`

    const NCPoly &d(const Letter &g) const;
    bool has_generator(const Letter &g) const { return diff.count(g) > 0; }
    LetterMap differential_map() const;
    std::vector<Letter> generators_of_degree(int degree) const;

    bool operator==(const DGA &o) const;
};

/// Assembles the knot/link DGA of the closure of `b`.
DGA build_dga(const BraidWord &b, const DgaMode &mode = {});

/// Coefficient ring used by build_dga for this braid and mode.
RingPtr dga_ring(const BraidWord &b, const DgaMode &mode);

struct D2Report {
    bool pass = true;
    std::optional<Letter> offender;
    std::optional<NCPoly> residue;
    int checked = 0;
};

D2Report check_d_squared(const DGA &d);

/// Substitutes coefficient variables. A bound variable disappears from the
/// ring unless it is bound to an expression in itself.
DGA specialize(const DGA &d, const std::map<std::string, Laurent> &bindings);

/// Adjoins e1 (degree `degree`) and e2 (degree - 1) with d e1 = e2.
DGA stabilize(const DGA &d, int degree);

/// Quotient by all chords with an endpoint outside `strands`, which must be a
/// union of closure components. Strands and components are renumbered.
DGA sublink_quotient(const DGA &d, const std::vector<int> &strands);

} // namespace kch

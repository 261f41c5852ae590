#pragma once

#include "kch/augpoly/commpoly.hpp"
#include "kch/dga/dga.hpp"
#include "kch/ncalg/eval.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kch {

/// Graded map to a commutative target: ring variables go to units, degree-0
/// generators anywhere, everything else to 0.
template <class R> using Augmentation = Assignment<R>;

template <class R> struct AugVerdict {
    bool ok = true;
    std::vector<std::pair<Letter, typename R::Value>> residues;
};

/// Evaluates d g for every degree-1 generator g.
template <class R> AugVerdict<R> is_augmentation(const DGA &d, const Augmentation<R> &eps) {
    for (const auto &v : d.ring->vars) {
        auto it = eps.vars.find(v);
        if (it == eps.vars.end())
            throw DomainError("augmentation gives no value for " + v);
        if (!eps.ring.is_unit(it->second))
            throw DomainError("augmentation sends " + v + " to the non-unit " +
                              eps.ring.str(it->second));
    }
    AugVerdict<R> out;
    for (const Letter &g : d.generators_of_degree(1)) {
        auto val = nc_eval(d.d(g), eps);
        if (!eps.ring.is_zero(val)) {
            out.ok = false;
            out.residues.emplace_back(g, val);
        }
    }
    return out;
}

/// Polynomial equations of the augmentations of a commuted DGA: abelianized
/// differentials of the degree-1 generators. Variables are the ring variables
/// (units) followed by all degree-0 generators.
struct AugSystem {
    std::vector<std::string> vars;
    int units = 0;
    std::vector<Letter> chords; // vars[units + k] names chords[k]
    std::vector<CommPoly> equations;
};

/// `drop` omits the equations of one family of degree-1 generators (B, C or D).
AugSystem aug_system(const DGA &d, std::optional<LetterKind> drop = std::nullopt);

struct SearchOptions {
    int64_t prime = 3;
    int max_chord_vars = 24;
    bool parallel = true;
};

/// Points of the system over F_p; each solution lists values in `vars` order.
struct AugSolutions {
    std::vector<std::string> vars;
    int units = 0;
    std::vector<std::vector<int64_t>> points;
};

uint64_t count_solutions(const AugSystem &sys, const SearchOptions &opt);
AugSolutions enumerate_solutions(const AugSystem &sys, const SearchOptions &opt);

uint64_t count_augmentations(const DGA &d, const SearchOptions &opt = {});
AugSolutions enumerate_augmentations(const DGA &d, const SearchOptions &opt = {});

/// Count for the hat DGA of a braid whose closure is a knot.
uint64_t transverse_augmentation_number(const BraidWord &b, const SearchOptions &opt = {});

} // namespace kch

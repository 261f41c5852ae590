#pragma once

#include "kch/ncalg/laurent.hpp"
#include "kch/ncalg/letter.hpp"

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kch {

enum class AlgebraMode {
    Commuted,            // homology classes live in the coefficient ring
    FullyNoncommutative, // homology letters interleave with chords
};

/// Coefficient ring Z[x_1^{±1}, ..., x_k^{±1}] together with the algebra mode
/// of the words built over it.
struct CoeffRing {
    std::vector<std::string> vars;
    AlgebraMode mode = AlgebraMode::Commuted;
    // Transverse DGAs live over R_0[U]: no stored coefficient may have U^{<0}.
    bool u_nonnegative = false;

    int index_of(std::string_view name) const;
    bool operator==(const CoeffRing &) const = default;
};

using RingPtr = std::shared_ptr<const CoeffRing>;

RingPtr make_ring(std::vector<std::string> vars,
                  AlgebraMode mode = AlgebraMode::Commuted,
                  bool u_nonnegative = false);

/// Appends `l` to a canonical word. In fully noncommutative mode adjacent
/// homology letters of one group merge: lambda_a and mu_a commute with each
/// other, each mu-tilde_i forms its own cyclic group, and nothing else
/// commutes. In commuted mode homology letters are rejected.
void append_letter(Word &w, const Letter &l, AlgebraMode mode);
Word concat(const Word &a, const Word &b, AlgebraMode mode);

class NCPolyBuilder;

class NCPoly {
  public:
    using Term = std::pair<Word, Laurent>;

    explicit NCPoly(RingPtr ring);

    static NCPoly constant(RingPtr ring, const Laurent &c);
    static NCPoly letter(RingPtr ring, const Letter &l, const Laurent &c = 1);
    static NCPoly word(RingPtr ring, const Word &w, const Laurent &c = 1);
    static NCPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr &ring() const { return ring_; }
    AlgebraMode mode() const { return ring_->mode; }
    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    NCPoly operator-() const;
    NCPoly &operator+=(const NCPoly &o);
    NCPoly &operator-=(const NCPoly &o);
    friend NCPoly operator+(NCPoly a, const NCPoly &b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly &b) { return a -= b; }
    friend NCPoly operator*(const NCPoly &a, const NCPoly &b);
    friend NCPoly operator*(const Laurent &c, const NCPoly &p);
    friend NCPoly operator*(const NCPoly &p, const Laurent &c) { return c * p; }
    bool operator==(const NCPoly &o) const;

    enum class DegreeKind { Zero, Homogeneous, Mixed };
    struct DegreeInfo {
        DegreeKind kind;
        int degree = 0;
    };
    DegreeInfo degree_info() const;

    /// Inverse of a unit: a single term whose coefficient is a Laurent unit and
    /// whose word consists of homology letters only.
    std::optional<NCPoly> unit_inverse() const;

    /// Canonical text form, e.g. "(-2) a21 a13 + a23 + (U - la) c11".
    std::string to_string() const;

  private:
    friend class NCPolyBuilder;
    static NCPoly install(NCPoly p, std::vector<Term> sorted_terms) {
        p.terms_ = std::move(sorted_terms);
        return p;
    }
    void check_same_ring(const NCPoly &o) const;
    RingPtr ring_;
    std::vector<Term> terms_; // sorted by word_less, nonzero coefficients
};

/// Accumulates terms in any order and produces a canonical NCPoly.
class NCPolyBuilder {
  public:
    explicit NCPolyBuilder(RingPtr ring) : ring_(std::move(ring)) {}
    void add(const Word &w, const Laurent &c);
    void add(Word &&w, const Laurent &c);
    void add(const NCPoly &p, const Laurent &scale = 1);
    NCPoly build() &&;
    size_t size() const { return acc_.size(); }

  private:
    RingPtr ring_;
    std::unordered_map<Word, Laurent, WordHash> acc_;
};

using LetterMap = std::function<std::optional<NCPoly>(const Letter &)>;
using CoeffMap = std::function<Laurent(const Laurent &)>;

/// Algebra map determined by letter images. Letters for which `letters`
/// returns nullopt are kept. The result lives over `target`.
NCPoly substitute(const NCPoly &p, const LetterMap &letters,
                  const RingPtr &target, const CoeffMap &coeffs = {});

inline NCPoly substitute(const NCPoly &p, const LetterMap &letters) {
    return substitute(p, letters, p.ring());
}

using DegreeMap = std::function<int(const Letter &)>;

/// Unique degree -1 derivation with ∂(xy) = (∂x)y + (-1)^{|x|} x(∂y)
/// extending `images`. Homology letters are cycles; any other letter without
/// an image raises DomainError.
NCPoly nc_derive(const NCPoly &p, const LetterMap &images,
                 const DegreeMap &degrees = letter_degree);

NCPoly nc_mul(const NCPoly &p, const NCPoly &q);

std::ostream &operator<<(std::ostream &os, const NCPoly &p);

/// Parses the canonical text form back into a polynomial.
NCPoly parse_ncpoly(std::string_view text, const RingPtr &ring);

} // namespace kch

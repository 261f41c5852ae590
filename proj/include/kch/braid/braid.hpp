#pragma once

#include "kch/ncalg/qlaurent.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kch {

struct BraidLetter {
    int k = 1;    // generator index, 1..n-1
    int sign = 1; // +1 for sigma_k, -1 for its inverse
    bool operator==(const BraidLetter &) const = default;
};

class BraidWord {
  public:
    BraidWord() = default;
    BraidWord(int n, std::vector<BraidLetter> letters);

    int strands() const { return n_; }
    const std::vector<BraidLetter> &letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int writhe() const;

    /// perm[i] = bottom position reached by the strand starting at top
    /// position i (1-based; perm[0] unused).
    std::vector<int> permutation() const;

    BraidWord inverse() const;
    BraidWord operator*(const BraidWord &o) const;
    /// Adds an (n+1)-st strand and appends sigma_n^{sign}.
    BraidWord stabilized(int sign) const;

    /// Canonical signed-integer form, e.g. "1 1 -2"; empty braid is "".
    std::string to_string() const;
    bool operator==(const BraidWord &) const = default;

  private:
    int n_ = 1;
    std::vector<BraidLetter> letters_;
};

/// Accepts "1 1 -2" or "s1^3 s2^-1" (also "1,1,-2"). Without `n`, the
/// strand count is 1 + max |index| (1 for the empty word).
BraidWord parse_braid(std::string_view text, std::optional<int> n = std::nullopt);

struct ComponentMap {
    int r = 0;
    std::vector<int> alpha;        // strand (1..n) -> component (1..r); alpha[0] unused
    std::vector<int> strand_count; // per component (index 1..r)
    std::vector<int> writhe;       // self-crossing writhe per component
    std::vector<int> leading;      // lowest strand of each component
    bool is_leading(int strand) const { return leading[alpha[strand]] == strand; }
};

ComponentMap components(const BraidWord &b);

/// Braid obtained by erasing all strands not in `keep` (1-based, any order).
BraidWord sub_braid(const BraidWord &b, const std::vector<int> &keep);

/// Self-linking number w - n of the transverse closure; the closure must be
/// a knot.
int self_linking(const BraidWord &b);

/// Alexander polynomial of the closure from the Burau matrix, normalized to
/// lowest exponent 0 and positive constant term. Used as a knot-type check.
QLaurent alexander_polynomial(const BraidWord &b);

} // namespace kch

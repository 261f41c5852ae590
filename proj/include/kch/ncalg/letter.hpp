#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kch {

enum class LetterKind : uint8_t {
    A = 0, // chord generators a_ij .. f_ij
    B,
    C,
    D,
    E,
    F,
    Stab,    // generators adjoined by stabilization; degree stored in `j`
    Lambda,  // longitude of component i (fully noncommutative mode only)
    Mu,      // meridian of component i (fully noncommutative mode only)
    MuTilde, // per-strand meridian used while applying the braid action
};

/// One generator letter. Chords use (i, j); homology letters use `i` as the
/// component/strand index and carry a nonzero exponent.
struct Letter {
    LetterKind kind = LetterKind::A;
    uint8_t i = 0;
    uint8_t j = 0;
    int16_t exp = 1;

    auto operator<=>(const Letter &) const = default;
    bool operator==(const Letter &) const = default;

    static Letter chord(LetterKind k, int i, int j) {
        return Letter{k, static_cast<uint8_t>(i), static_cast<uint8_t>(j), 1};
    }
    static Letter a(int i, int j) { return chord(LetterKind::A, i, j); }
    static Letter stab(int index, int degree) {
        return Letter{LetterKind::Stab, static_cast<uint8_t>(index),
                      static_cast<uint8_t>(degree), 1};
    }
    static Letter homology(LetterKind k, int index, int exponent) {
        return Letter{k, static_cast<uint8_t>(index), 0,
                      static_cast<int16_t>(exponent)};
    }
};

inline bool is_homology(LetterKind k) {
    return k == LetterKind::Lambda || k == LetterKind::Mu ||
           k == LetterKind::MuTilde;
}
inline bool is_homology(const Letter &l) { return is_homology(l.kind); }
inline bool is_chord(const Letter &l) { return l.kind <= LetterKind::F; }

// a:0, b/c/d:1, e/f:2, homology letters 0, stabilization letters as stored.
inline int letter_degree(const Letter &l) {
    switch (l.kind) {
    case LetterKind::A:
        return 0;
    case LetterKind::B:
    case LetterKind::C:
    case LetterKind::D:
        return 1;
    case LetterKind::E:
    case LetterKind::F:
        return 2;
    case LetterKind::Stab:
        return l.j;
    default:
        return 0;
    }
}

/// "a12", "c31", "mu1^-2", "mt2", "s1"; indices >= 10 are separated by '_'.
std::string letter_name(const Letter &l);

/// Inverse of letter_name; returns false when `text` is not a letter.
bool parse_letter(const std::string &text, Letter &out);

using Word = std::vector<Letter>;

struct WordHash {
    size_t operator()(const Word &w) const noexcept {
        uint64_t h = 1469598103934665603ull;
        for (const Letter &l : w) {
            uint64_t v = static_cast<uint64_t>(l.kind) |
                         (static_cast<uint64_t>(l.i) << 8) |
                         (static_cast<uint64_t>(l.j) << 16) |
                         (static_cast<uint64_t>(static_cast<uint16_t>(l.exp)) << 24);
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

int word_degree(const Word &w);

/// Global term order: degree, then length, then lexicographic on letters.
bool word_less(const Word &a, const Word &b);

} // namespace kch

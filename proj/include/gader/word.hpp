#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gader/error.hpp"

namespace gader {

/// Flattened one-generator symbol: 2*gen for g, 2*gen+1 for g^-1.
/// The symbol order (generator id ascending, positive before negative) is
/// the letter order underlying shortlex everywhere in the library.
using Sym = std::int32_t;

inline Sym sym_make(std::int32_t gen, bool positive) {
    return 2 * gen + (positive ? 0 : 1);
}
inline Sym sym_inverse(Sym s) { return s ^ 1; }
inline std::int32_t sym_gen(Sym s) { return s >> 1; }
inline bool sym_positive(Sym s) { return (s & 1) == 0; }

/// One run of a word: generator id and a nonzero exponent.
struct Letter {
    std::int32_t gen;
    std::int64_t exp;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

/// Freely reduced word in run-length form. Adjacent letters always have
/// distinct generator ids and nonzero exponents; the empty word is the
/// identity. Construction enforces the invariant, so every Word in the
/// library is reduced.
class Word {
public:
    Word() = default;

    /// Reduces an arbitrary letter sequence (merges runs, cancels, drops
    /// zero exponents).
    static Word from_letters(const std::vector<Letter>& letters);

    /// Rebuilds a word from a flattened symbol string (assumed free of
    /// xx^-1 adjacencies, as rewriting normal forms are; merges runs only).
    static Word from_syms(const std::vector<Sym>& syms);

    static Word identity() { return Word(); }

    /// Single generator power g^exp.
    static Word power(std::int32_t gen, std::int64_t exp);

    bool is_identity() const { return letters_.empty(); }

    const std::vector<Letter>& letters() const { return letters_; }

    /// Number of one-generator symbols: sum of |exponent|.
    std::int64_t length() const;

    /// Largest generator id used, or -1 for the identity.
    std::int32_t max_gen() const;

    /// Free inverse (reverse, negate); stays reduced.
    Word inverse() const;

    /// Free product with cancellation at the seam.
    friend Word operator*(const Word& a, const Word& b);

    std::vector<Sym> flatten() const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    std::vector<Letter> letters_;
};

/// Shortlex: length first, then the flattened symbol strings
/// lexicographically. Total order; the canonical order for every
/// enumeration in the library.
bool shortlex_less(const Word& a, const Word& b);

struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        return shortlex_less(a, b);
    }
};

/// Renders "x1 x2^-1 x1^3"; the identity renders "e".
std::string format_word(const Word& w, const std::vector<std::string>& names);

/// Parses the word grammar: whitespace-separated factors, each a generator
/// name or a parenthesized subword, optionally followed by ^k. "e" and "1"
/// denote the identity. Positions in errors are relative to `text`.
Word parse_word(const std::string& text,
                const std::map<std::string, std::int32_t>& gen_ids);

} // namespace gader

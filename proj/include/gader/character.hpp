#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gader/groupoid.hpp"
#include "gader/operators.hpp"
#include "gader/rational.hpp"

namespace gader {

/// Identifies the elementary morphism (source -> g source g^-1, wit g) for
/// a positive generator g. Values on inverse-generator witnesses are folded
/// in through T(xi^-1) = -T(xi).
struct ElementaryKey {
    Word source;
    std::int32_t gen;

    friend bool operator==(const ElementaryKey& a, const ElementaryKey& b) {
        return a.gen == b.gen && a.source == b.source;
    }
};

struct ElementaryKeyLess {
    bool operator()(const ElementaryKey& a, const ElementaryKey& b) const {
        if (a.source != b.source) return shortlex_less(a.source, b.source);
        return a.gen < b.gen;
    }
};

/// Additive character on the groupoid, described intensionally: finitely
/// many base values on elementary morphisms, extended by additivity under
/// composition and T(xi^-1) = -T(xi); unlisted elementary morphisms have
/// value zero. Finiteness of the base map gives local finiteness per
/// generator fiber structurally. Over a free context any base assignment
/// is a well-defined character; over a relator context well-definedness is
/// what the constraint system verifies.
class Character {
public:
    Character() = default;
    explicit Character(const GroupCtx* ctx) : ctx_(ctx) {}

    const GroupCtx* ctx() const { return ctx_; }
    const std::map<ElementaryKey, Rational, ElementaryKeyLess>& base_values() const {
        return base_;
    }

    /// Adds a base value on (source -> ..., wit gen^(positive ? 1 : -1)),
    /// canonicalized to a positive-generator key.
    void add_base(const Word& source, std::int32_t gen, bool positive,
                  const Rational& value);

    Rational base_value(const Word& source, std::int32_t gen) const;

    /// Value on an arbitrary morphism, by factoring the witness into
    /// elementary conjugation steps (rightmost letter first).
    Rational evaluate(const Morphism& m) const;

private:
    const GroupCtx* ctx_ = nullptr;
    std::map<ElementaryKey, Rational, ElementaryKeyLess> base_;
};

/// Extensional character fragment over an enumerated morphism set. Entries
/// may be zero: presence records that the morphism was covered.
class CharacterTable {
public:
    struct Entry {
        Morphism morphism;
        Rational value;
    };

    CharacterTable() = default;
    explicit CharacterTable(const GroupCtx* ctx) : ctx_(ctx) {}

    const GroupCtx* ctx() const { return ctx_; }
    bool empty() const { return map_.empty(); }
    std::size_t size() const { return map_.size(); }

    /// Entries sorted by (source, witness).
    std::vector<Entry> entries() const;

    /// Validates the morphism; replaces the value if the key repeats.
    void insert(const Morphism& m, const Rational& value);

    std::optional<Rational> value(const Word& source, const Word& witness) const;
    std::optional<Rational> value(const Morphism& m) const {
        return value(m.source, m.witness);
    }

private:
    struct KeyLess {
        bool operator()(const std::pair<Word, Word>& a,
                        const std::pair<Word, Word>& b) const {
            if (a.first != b.first) return shortlex_less(a.first, b.first);
            return shortlex_less(a.second, b.second);
        }
    };

    const GroupCtx* ctx_ = nullptr;
    std::map<std::pair<Word, Word>, Entry, KeyLess> map_;
};

// ---------------------------------------------------------------------------
// Operator <-> character dictionary

/// T(a -> b, wit g) = coefficient of normal_form(g a) in column X(g).
CharacterTable char_from_operator(const SparseOperator& op,
                                  const std::vector<Morphism>& morphisms);

/// Rebuilds columns from a table: X(g) = sum over table morphisms with
/// witness g of T * normal_form(g source). Throws DomainError when a
/// requested column has no presence in the table at all.
SparseOperator operator_from_table(const GroupCtx& ctx, const CharacterTable& table,
                                   const std::vector<Word>& columns);

struct AdditivityViolation {
    Morphism xi;  ///< applied first
    Morphism eta; ///< applied second
    Morphism composite;
    Rational lhs; ///< T(eta * xi)
    Rational rhs; ///< T(eta) + T(xi)
};

struct AdditivityReport {
    std::vector<AdditivityViolation> violations;
    std::size_t pairs_checked = 0;
    bool passed() const { return violations.empty(); }
};

/// Checks T(eta * xi) = T(eta) + T(xi) on every composable pair whose
/// composite is also in the table.
AdditivityReport additivity_check(const GroupCtx& ctx, const CharacterTable& table);

struct LocalFinitenessReport {
    std::size_t nonzero_prev = 0; ///< over ball(radius - 1)
    std::size_t nonzero = 0;      ///< over ball(radius)
    bool stabilized = false;      ///< heuristic certificate, not a proof
    bool base_finite = true;      ///< structural: the base map is finite
    bool passed() const { return stabilized; }
};

/// Counts nonzero values on the fiber H_g over object balls of radius-1
/// and radius; stabilization is reported as a heuristic certificate.
LocalFinitenessReport local_finiteness_check(const GroupCtx& ctx, const Character& chr,
                                             const Word& g, int object_radius);

// ---------------------------------------------------------------------------
// Inner characters and loop restriction

/// T(xi) = [target = a] - [source = a]: the character of ad(a). Two base
/// values per generator (none where the generator commutes with a).
Character inner_character(const GroupCtx& ctx, const Word& a);

/// p_a: values on loops at `a`, one per centralizer member within the
/// witness ball.
CharacterTable restrict_loops(const GroupCtx& ctx, const Character& chr, const Word& a,
                              int witness_radius, std::size_t cap = kDefaultCap);

struct LoopViolation {
    Word object;
    Word witness;
    Rational value;
};

struct LoopVanishingReport {
    std::vector<LoopViolation> violations;
    std::size_t loops_checked = 0;
    bool passed() const { return violations.empty(); }
};

/// A character vanishing on loops at `a` must vanish on loops at every
/// class member; scans all of them (including `a` itself) and reports any
/// nonzero loop value.
LoopVanishingReport loop_vanishing_transfer_check(const GroupCtx& ctx,
                                                  const Character& chr, const Word& a,
                                                  int object_radius, int witness_radius,
                                                  std::size_t cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Stabilizer extension

/// A character on one class component built from an additive map chi on
/// the centralizer of `base`: pick a transversal conjugator g_b per class
/// member (shortlex-least, g_base = e) and set
/// T(b -> c, wit x) = chi(g_c^-1 x g_b).
class StabilizerExtension {
public:
    const GroupCtx* ctx() const { return ctx_; }
    const Word& base() const { return base_; }
    const std::map<Word, Word, ShortlexLess>& transversal() const { return transversal_; }
    const std::map<Word, Rational, ShortlexLess>& chi_closure() const {
        return chi_closure_;
    }

    /// Throws DomainError when an endpoint is outside the materialized
    /// component or the centralizer element is outside chi's closure.
    Rational evaluate(const Morphism& m) const;

    CharacterTable materialize(const std::vector<Morphism>& morphisms) const;

private:
    const GroupCtx* ctx_ = nullptr;
    Word base_;
    std::map<Word, Word, ShortlexLess> transversal_;
    std::map<Word, Rational, ShortlexLess> chi_closure_;

    friend StabilizerExtension extend_from_stabilizer(const GroupCtx&, const Word&,
                                                      const std::map<Word, Rational,
                                                                     ShortlexLess>&,
                                                      int, int, int, std::size_t);
};

/// chi maps centralizer generators (words commuting with a) to rationals
/// and is closed additively up to chi_depth (0 picks a depth large enough
/// for morphisms within the given radii). Validates additivity of the
/// closure on the fly.
StabilizerExtension extend_from_stabilizer(
    const GroupCtx& ctx, const Word& a,
    const std::map<Word, Rational, ShortlexLess>& chi, int object_radius,
    int witness_radius, int chi_depth = 0, std::size_t cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Path-sum condition on conjugation graphs

enum class FfVerdict { Pass, Fail, InconclusiveTruncation };

struct FfPath {
    PathKind kind;
    std::vector<Morphism> edges;
    std::vector<Rational> values;
    Rational sum;
    bool judged;    ///< cycles always; truncated paths only with support margin
    bool violation; ///< judged and sum != 0
};

struct FfReport {
    FfVerdict verdict = FfVerdict::Pass;
    std::vector<FfPath> paths;
};

/// Sums the character along every conjugation-by-g path on the class ball
/// of `a`. Cycles must sum to zero. A truncated path is judged only when
/// its first and last edge values vanish (the support then lies strictly
/// inside the ball); otherwise it is inconclusive rather than a failure.
FfReport ff_check(const GroupCtx& ctx, const Character& chr, const Word& g,
                  const Word& a, int object_radius, std::size_t cap = kDefaultCap);

// ---------------------------------------------------------------------------
// Constructions

/// The two-generator free group with the single base value
/// T(x2 x1 x2^-1 -> x1 x2 x1 x2^-1 x1^-1, wit x1) = 1: a locally finite
/// character vanishing on loops at x1 whose path sums still fail to vanish.
struct CounterexampleF2 {
    std::shared_ptr<const GroupCtx> ctx;
    Character character;
};

CounterexampleF2 counterexample_f2();

/// Derivation with the diagonal matrix T(g) at (g, g), where T is the
/// additive extension of `hom` from the generators. Requires every relator
/// exponent sum to vanish under hom.
DerivationSpec identity_class_derivation(const GroupCtx& ctx,
                                         const std::map<std::int32_t, Rational>& hom);

} // namespace gader

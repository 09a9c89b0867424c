#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gader/algebra.hpp"
#include "gader/group.hpp"

namespace gader {

/// Column-finite linear operator on the group algebra, stored column by
/// column: column(g) = X(g). Each stored column is a finite element, which
/// is the column-finiteness condition by construction. A column absent
/// from the map is *unmaterialized*: renderers may treat it as zero, but
/// every checker in this module reports it as a missing column so that
/// truncation artifacts are never confused with mathematical failures.
class SparseOperator {
public:
    using Columns = std::map<Word, AlgebraElement, ShortlexLess>;

    SparseOperator() = default;
    explicit SparseOperator(const GroupCtx* ctx) : ctx_(ctx) {}

    const GroupCtx* ctx() const { return ctx_; }
    const Columns& columns() const { return columns_; }

    bool has_column(const Word& g) const { return columns_.count(g) != 0; }

    /// Throws MissingColumnError when the column is unmaterialized.
    const AlgebraElement& column(const Word& g) const;

    /// Zero for unmaterialized columns.
    AlgebraElement column_or_zero(const Word& g) const;

    /// Normalizes the key; the value's words must already be normal forms.
    void set_column(const Word& g, AlgebraElement value);

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.columns_ == b.columns_;
    }

private:
    const GroupCtx* ctx_ = nullptr;
    Columns columns_;
};

/// X(u) by Eq-style column reads: sum of coeff_u(g) * column(g).
AlgebraElement apply(const SparseOperator& op, const AlgebraElement& u);

/// Inner derivation ad(a) materialized over `domain`: column at g is
/// commutator(a, g). For a single group element b the matrix entries are
/// exactly [h = bg] - [h = gb].
SparseOperator ad(const GroupCtx& ctx, const AlgebraElement& a, const Ball& domain);

struct LeibnizViolation {
    Word u, v;
    AlgebraElement lhs; ///< X(uv)
    AlgebraElement rhs; ///< X(u)v + uX(v)
};

struct MissingColumn {
    Word u, v;
    Word column; ///< which column was unmaterialized
};

struct LeibnizReport {
    std::vector<LeibnizViolation> violations;
    std::vector<MissingColumn> missing;
    std::size_t pairs_checked = 0;

    bool passed() const { return violations.empty() && missing.empty(); }
};

/// Checks X(uv) = X(u)v + uX(v) on each pair. Missing columns are reported
/// separately, never as violations.
LeibnizReport leibniz_check(const GroupCtx& ctx, const SparseOperator& op,
                            const std::vector<std::pair<Word, Word>>& pairs);

/// All (u, v) with u, v and normal_form(uv) inside the ball.
std::vector<std::pair<Word, Word>> in_ball_pairs(const GroupCtx& ctx, const Ball& b);

/// A derivation described by its values on the generators and extended by
/// the Leibniz rule; the only finite description available over an
/// infinite group. Generators without an entry have value zero.
struct DerivationSpec {
    const GroupCtx* ctx = nullptr;
    std::map<std::int32_t, AlgebraElement> generator_values;
};

/// Leibniz extension to an arbitrary word: X(e) = 0, X(g_i) as specified,
/// X(uv) = X(u)v + uX(v), X(g^-1) = -g^-1 X(g) g^-1. Computed as the sum
/// over letter positions of prefix * X(letter) * suffix, which is what any
/// bracketing of the Leibniz rule expands to.
AlgebraElement eval_word(const DerivationSpec& spec, const Word& w);

/// Linear extension of eval_word to algebra elements.
AlgebraElement eval_element(const DerivationSpec& spec, const AlgebraElement& u);

struct RelatorViolation {
    std::size_t relator_index;
    Word relator;
    AlgebraElement value; ///< eval_word(relator), nonzero
};

struct RelatorReport {
    std::vector<RelatorViolation> violations;
    std::size_t relators_checked = 0;
    bool passed() const { return violations.empty(); }
};

/// Every relator is the identity in G, so a well-defined derivation must
/// send it to zero. Vacuous for free contexts.
RelatorReport relator_consistency(const DerivationSpec& spec);

/// Materializes columns over a ball.
SparseOperator materialize(const DerivationSpec& spec, const Ball& domain);

/// Column-wise X(Y(g)) - Y(X(g)) over the domain. Both operators must
/// cover the domain and each other's column supports.
SparseOperator lie_bracket(const GroupCtx& ctx, const SparseOperator& x,
                           const SparseOperator& y, const Ball& domain);

} // namespace gader

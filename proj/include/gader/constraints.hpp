#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gader/character.hpp"
#include "gader/groupoid.hpp"
#include "gader/linalg.hpp"

namespace gader {

/// One unknown of the constraint system: the character value on the
/// elementary morphism (object -> g object g^-1, wit g).
struct ConstraintUnknown {
    Word object;
    std::int32_t gen;
};

/// One additive contribution of a relator chain: +1 on the elementary
/// morphism for a positive letter, -1 (folded through T(xi^-1) = -T(xi))
/// for an inverse letter. Terms are kept uncombined so each one points
/// back at its chain position.
struct ConstraintTerm {
    Rational coeff;
    Word object;
    std::int32_t gen;
    std::size_t chain_position;
    std::optional<std::size_t> unknown_index; ///< empty when outside the ball
};

/// The relator-induced relation sum_j T(xi_j) = 0 at one base object.
struct ConstraintRow {
    std::size_t relator_index;
    Word object;
    bool boundary; ///< references an object outside the ball
    std::vector<ConstraintTerm> terms;
    SparseRow combined; ///< per-unknown coefficients; empty for boundary rows
};

/// Linear system expressing that a character's base values extend
/// additively across every relator at every object of a ball. Boundary
/// rows are materialized but quarantined from rank computations; they are
/// the linear-algebra analogue of an inconclusive truncation.
struct ConstraintSystem {
    const GroupCtx* ctx = nullptr;
    int object_radius = 0;
    std::vector<ConstraintUnknown> unknowns; ///< object-major shortlex, generator minor
    std::vector<ConstraintRow> rows;         ///< relator-major, objects shortlex

    std::size_t interior_row_count() const;
};

/// The loop of elementary morphisms a relator induces at `alpha`, in
/// application order (the relator's rightmost letter conjugates first).
/// The composite of the chain is the loop at alpha whose witness is the
/// relator itself, i.e. the identity morphism; the last target returns to
/// alpha.
std::vector<Morphism> relator_morphism_chain(const GroupCtx& ctx, const Word& relator,
                                             const Word& alpha);

ConstraintSystem build_system(const GroupCtx& ctx, int object_radius,
                              std::size_t cap = kDefaultCap);

struct SolveResult {
    std::vector<std::vector<Rational>> basis; ///< kernel of the interior rows
    std::size_t rank = 0;
    std::size_t interior_rows = 0;
    std::size_t boundary_rows = 0;
    std::size_t dimension() const { return basis.size(); }
};

SolveResult solve_system(const ConstraintSystem& system);

struct ConstraintViolation {
    std::size_t row_index;
    std::size_t relator_index;
    Word relator;
    Word object;
    Rational sum;
};

struct ConstraintReport {
    std::vector<ConstraintViolation> violations;
    std::size_t rows_checked = 0;
    std::size_t boundary_skipped = 0;
    bool passed() const { return violations.empty(); }
};

/// Evaluates every interior row at the character's base values. An empty
/// violation list certifies well-definedness within the ball.
ConstraintReport verify_character(const GroupCtx& ctx, const Character& chr,
                                  int object_radius, std::size_t cap = kDefaultCap);

/// Interior rows as Matrix Market-style coordinate text (1-based indices,
/// rational values).
std::string to_matrix_market(const ConstraintSystem& system);

} // namespace gader

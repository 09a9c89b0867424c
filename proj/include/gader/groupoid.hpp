#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gader/group.hpp"

namespace gader {

/// Morphism of the adjoint-action groupoid: source a, witness g, target
/// b = g a g^-1. The target is derivable but stored anyway so that
/// truncation bugs surface as validation failures instead of silent
/// miscomputation; compose and invert re-validate.
struct Morphism {
    Word source;
    Word witness;
    Word target;

    bool is_loop() const { return source == target; }

    friend bool operator==(const Morphism& a, const Morphism& b) {
        return a.source == b.source && a.witness == b.witness && a.target == b.target;
    }
};

/// Order by (source, witness); the target is determined by them.
struct MorphismLess {
    bool operator()(const Morphism& a, const Morphism& b) const {
        if (a.source != b.source) return shortlex_less(a.source, b.source);
        return shortlex_less(a.witness, b.witness);
    }
};

Morphism make_morphism(const GroupCtx& ctx, const Word& a, const Word& g);

/// Throws when conjugate(witness, source) != target.
void validate_morphism(const GroupCtx& ctx, const Morphism& m);

/// eta * xi: xi first, then eta; requires eta.source == xi.target.
Morphism compose(const GroupCtx& ctx, const Morphism& eta, const Morphism& xi);

Morphism invert(const GroupCtx& ctx, const Morphism& xi);

/// The fiber H_g: one morphism with witness g per object.
std::vector<Morphism> fiber(const GroupCtx& ctx, const Word& g,
                            const std::vector<Word>& objects);

/// All morphisms with source and target in the conjugacy-class ball of `a`
/// and witness in ball(witness_radius), sorted by (source, witness).
std::vector<Morphism> component_morphisms(const GroupCtx& ctx, const Word& a,
                                          int object_radius, int witness_radius,
                                          std::size_t cap = kDefaultCap);

/// One conjugation-by-g step: from -> g from g^-1.
struct ConjEdge {
    Word from;
    Word to;
    bool to_boundary; ///< target fell outside the materialized vertex set
};

enum class PathKind { Cycle, TruncatedPath };

/// Maximal run of edges under conjugation by g: a cycle closed inside the
/// vertex set, or a path truncated by the ball boundary.
struct ConjPath {
    PathKind kind;
    std::vector<std::size_t> edge_indices; ///< in traversal order
};

/// The graph on a conjugacy-class ball whose edges are b -> g b g^-1.
/// Every vertex has out-degree one, so the edges partition into directed
/// paths and cycles; targets outside the ball are kept as flagged boundary
/// vertices.
struct ConjGraph {
    const GroupCtx* ctx = nullptr;
    Word mover; ///< g
    Word base;  ///< a
    std::vector<Word> vertices;          ///< class-ball members, shortlex
    std::vector<Word> boundary_vertices; ///< out-of-ball targets, shortlex
    std::vector<ConjEdge> edges;         ///< edges[i] starts at vertices[i]
    std::vector<ConjPath> paths;

    Morphism edge_morphism(std::size_t edge_index) const;
};

ConjGraph gamma_graph(const GroupCtx& ctx, const Word& g, const Word& a,
                      int object_radius, std::size_t cap = kDefaultCap);

/// GraphViz rendering: vertices labeled by words (boundary dashed), edges
/// labeled by the mover, one color class per path/cycle.
std::string to_dot(const ConjGraph& graph);

} // namespace gader

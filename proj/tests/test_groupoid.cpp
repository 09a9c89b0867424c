#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gader/groupoid.hpp"
#include "test_util.hpp"

using namespace gader;
using testutil::f2;
using testutil::s3_table;
using testutil::z2;

TEST_CASE("make_morphism computes and stores the target") {
    const GroupCtx& ctx = f2();
    Morphism loop = make_morphism(ctx, ctx.parse("x1"), Word::identity());
    CHECK(loop.is_loop());
    CHECK(loop.target == ctx.parse("x1"));

    Morphism m = make_morphism(ctx, ctx.parse("x1"), ctx.parse("x2"));
    CHECK(m.target == ctx.parse("x2 x1 x2^-1"));

    Morphism zl = make_morphism(z2(), z2().parse("a"), z2().parse("b"));
    CHECK(zl.is_loop());
    CHECK(zl.witness == z2().parse("b"));
}

TEST_CASE("validate_morphism rejects wrong targets") {
    const GroupCtx& ctx = f2();
    Morphism bad{ctx.parse("x1"), ctx.parse("x2"), ctx.parse("x1")};
    CHECK_THROWS(validate_morphism(ctx, bad));
}

TEST_CASE("composition follows the witness product") {
    const GroupCtx& ctx = f2();
    Morphism xi = make_morphism(ctx, ctx.parse("x1"), ctx.parse("x2"));
    Morphism identity_loop = make_morphism(ctx, xi.target, Word::identity());
    CHECK(compose(ctx, identity_loop, xi) == xi);

    Morphism inv = invert(ctx, xi);
    Morphism round = compose(ctx, inv, xi);
    CHECK(round.is_loop());
    CHECK(round.witness.is_identity());
    CHECK(round.source == xi.source);

    // Witnesses multiply, second-applied on the left.
    Morphism eta = make_morphism(ctx, xi.target, ctx.parse("x1"));
    Morphism comp = compose(ctx, eta, xi);
    CHECK(comp.witness == ctx.parse("x1 x2"));
    CHECK(comp.source == ctx.parse("x1"));
    CHECK(comp.target == ctx.conjugate(ctx.parse("x1 x2"), ctx.parse("x1")));

    Morphism other = make_morphism(ctx, ctx.parse("x2"), ctx.parse("x1"));
    CHECK_THROWS_AS(compose(ctx, other, xi), NonComposableError);
}

TEST_CASE("invert is an involution") {
    const GroupCtx& ctx = f2();
    Morphism xi = make_morphism(ctx, ctx.parse("x1 x2"), ctx.parse("x2^-1 x1"));
    CHECK(invert(ctx, invert(ctx, xi)) == xi);
    Morphism loop = make_morphism(ctx, ctx.parse("x1"), Word::identity());
    CHECK(invert(ctx, loop) == loop);
    Morphism m = make_morphism(ctx, ctx.parse("x1"), ctx.parse("x2"));
    Morphism mi = invert(ctx, m);
    CHECK(mi.source == ctx.parse("x2 x1 x2^-1"));
    CHECK(mi.target == ctx.parse("x1"));
    CHECK(mi.witness == ctx.parse("x2^-1"));
}

TEST_CASE("compose is associative on composable triples") {
    const GroupCtx& ctx = f2();
    Ball witnesses = ball(ctx, 1);
    Word a = ctx.parse("x1");
    for (const Word& g1 : witnesses.elements)
        for (const Word& g2 : witnesses.elements)
            for (const Word& g3 : witnesses.elements) {
                Morphism m1 = make_morphism(ctx, a, g1);
                Morphism m2 = make_morphism(ctx, m1.target, g2);
                Morphism m3 = make_morphism(ctx, m2.target, g3);
                CHECK(compose(ctx, m3, compose(ctx, m2, m1)) ==
                      compose(ctx, compose(ctx, m3, m2), m1));
            }
}

TEST_CASE("fibers meet each object exactly once") {
    const GroupCtx& ctx = f2();
    std::vector<Word> objects = ball(ctx, 1).elements;

    auto loops = fiber(ctx, Word::identity(), objects);
    CHECK(loops.size() == objects.size());
    for (const Morphism& m : loops) CHECK(m.is_loop());

    auto zf = fiber(z2(), z2().parse("a b"), ball(z2(), 1).elements);
    for (const Morphism& m : zf) CHECK(m.is_loop());

    auto hx1 = fiber(ctx, ctx.parse("x1"), {ctx.parse("x1"), ctx.parse("x2")});
    REQUIRE(hx1.size() == 2);
    CHECK(hx1[0].source == ctx.parse("x1"));
    CHECK(hx1[0].target == ctx.parse("x1"));
    CHECK(hx1[1].source == ctx.parse("x2"));
    CHECK(hx1[1].target == ctx.parse("x1 x2 x1^-1"));

    std::set<Word, ShortlexLess> sources;
    for (const Morphism& m : hx1) sources.insert(m.source);
    CHECK(sources.size() == hx1.size());
}

TEST_CASE("component of the identity is all loops at e") {
    const GroupCtx& ctx = f2();
    auto mor = component_morphisms(ctx, Word::identity(), 1, 2);
    CHECK(mor.size() == ball(ctx, 2).size());
    for (const Morphism& m : mor) {
        CHECK(m.source.is_identity());
        CHECK(m.target.is_identity());
    }
}

TEST_CASE("abelian components are loops only") {
    auto mor = component_morphisms(z2(), z2().parse("a"), 2, 1);
    CHECK(mor.size() == ball(z2(), 1).size());
    for (const Morphism& m : mor) CHECK(m.is_loop());
}

TEST_CASE("F2 component morphisms at radii (1,1)") {
    const GroupCtx& ctx = f2();
    auto mor = component_morphisms(ctx, ctx.parse("x1"), 1, 1);
    // Class ball: {x1, x2 x1 x2^-1, x2^-1 x1 x2}; witnesses of length <= 1.
    // Per class member: e and the two x1-powers fix it or move it out, and
    // each x2-conjugate connects to x1 one way.
    std::set<Word, ShortlexLess> members(
        {ctx.parse("x1"), ctx.parse("x2 x1 x2^-1"), ctx.parse("x2^-1 x1 x2")});
    for (const Morphism& m : mor) {
        CHECK(members.count(m.source));
        CHECK(members.count(m.target));
        CHECK(m.witness.length() <= 1);
        validate_morphism(ctx, m);
    }
    // Sorted by (source, witness) and duplicate-free.
    for (std::size_t i = 1; i < mor.size(); ++i)
        CHECK(MorphismLess{}(mor[i - 1], mor[i]));
    // x1 has loops with witness e, x1, x1^-1 and two morphisms out to the
    // conjugates; each conjugate has the identity loop and one edge to x1.
    std::size_t loops_at_x1 = 0, edges_from_x1 = 0;
    for (const Morphism& m : mor) {
        if (m.source == ctx.parse("x1") && m.is_loop()) ++loops_at_x1;
        if (m.source == ctx.parse("x1") && !m.is_loop()) ++edges_from_x1;
    }
    CHECK(loops_at_x1 == 3);
    CHECK(edges_from_x1 == 2);
}

TEST_CASE("component morphisms are closed under invert and slack compose") {
    const GroupCtx& ctx = f2();
    auto tight = component_morphisms(ctx, ctx.parse("x1"), 1, 1);
    auto slack = component_morphisms(ctx, ctx.parse("x1"), 1, 2);
    std::set<Morphism, MorphismLess> slack_set(slack.begin(), slack.end());
    for (const Morphism& m : tight) CHECK(slack_set.count(invert(ctx, m)));
    for (const Morphism& m1 : tight)
        for (const Morphism& m2 : tight)
            if (m1.source == m2.target) CHECK(slack_set.count(compose(ctx, m1, m2)));
}

TEST_CASE("gamma graph on an abelian class is one self-loop") {
    ConjGraph g = gamma_graph(z2(), z2().parse("b"), z2().parse("a"), 2);
    REQUIRE(g.vertices.size() == 1);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].from == g.edges[0].to);
    CHECK(!g.edges[0].to_boundary);
    REQUIRE(g.paths.size() == 1);
    CHECK(g.paths[0].kind == PathKind::Cycle);
    CHECK(g.paths[0].edge_indices.size() == 1);
}

TEST_CASE("gamma graph of x1 acting on its own class") {
    const GroupCtx& ctx = f2();
    ConjGraph g = gamma_graph(ctx, ctx.parse("x1"), ctx.parse("x1"), 2);

    // The fixed point x1 is a self-loop cycle.
    bool found_self_loop = false;
    for (const ConjPath& p : g.paths) {
        if (p.kind != PathKind::Cycle) continue;
        for (std::size_t e : p.edge_indices)
            if (g.edges[e].from == ctx.parse("x1")) {
                CHECK(g.edges[e].to == ctx.parse("x1"));
                CHECK(p.edge_indices.size() == 1);
                found_self_loop = true;
            }
    }
    CHECK(found_self_loop);

    // The orbit through x2 x1 x2^-1 is a truncated path:
    // ... -> x1^-1(x2 x1 x2^-1)x1 -> x2 x1 x2^-1 -> x1(x2 x1 x2^-1)x1^-1 -> ...
    Word c = ctx.parse("x2 x1 x2^-1");
    bool found_orbit = false;
    for (const ConjPath& p : g.paths) {
        for (std::size_t e : p.edge_indices) {
            if (g.edges[e].from != c) continue;
            found_orbit = true;
            CHECK(p.kind == PathKind::TruncatedPath);
            CHECK(g.edges[e].to == ctx.conjugate(ctx.parse("x1"), c));
            CHECK(p.edge_indices.size() >= 2);
        }
    }
    CHECK(found_orbit);

    // Every vertex has out-degree one and each edge sits in exactly one path.
    std::vector<int> seen(g.edges.size(), 0);
    for (const ConjPath& p : g.paths)
        for (std::size_t e : p.edge_indices) ++seen[e];
    for (int n : seen) CHECK(n == 1);
    CHECK(g.edges.size() == g.vertices.size());
}

TEST_CASE("gamma graph flags boundary targets") {
    const GroupCtx& ctx = f2();
    ConjGraph g = gamma_graph(ctx, ctx.parse("x2"), ctx.parse("x1"), 1);
    bool any_boundary = false;
    for (const ConjEdge& e : g.edges)
        if (e.to_boundary) {
            any_boundary = true;
            CHECK(std::binary_search(g.boundary_vertices.begin(),
                                     g.boundary_vertices.end(), e.to, ShortlexLess{}));
        }
    CHECK(any_boundary);
}

TEST_CASE("finite class gamma graph decomposes into cycles only") {
    const GroupCtx& ctx = s3_table();
    ConjGraph g = gamma_graph(ctx, ctx.parse("a"), ctx.parse("b"), kRadiusFull);
    CHECK(g.vertices.size() == 3);
    CHECK(g.boundary_vertices.empty());
    for (const ConjPath& p : g.paths) CHECK(p.kind == PathKind::Cycle);
    // Conjugation by the 3-cycle a permutes the three transpositions in one
    // 3-cycle.
    REQUIRE(g.paths.size() == 1);
    CHECK(g.paths[0].edge_indices.size() == 3);
}

TEST_CASE("dot export carries labels, paths and boundary styling") {
    const GroupCtx& ctx = f2();
    ConjGraph g = gamma_graph(ctx, ctx.parse("x1"), ctx.parse("x1"), 1);
    std::string dot = to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label=\"x1\"") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(dot.find("color=") != std::string::npos);
}

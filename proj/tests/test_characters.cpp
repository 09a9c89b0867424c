#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gader/character.hpp"
#include "test_util.hpp"

using namespace gader;
using testutil::f2;
using testutil::s3_table;
using testutil::z2;

namespace {

AlgebraElement elem(const GroupCtx& ctx, const std::string& text) {
    return parse_element(ctx, text);
}

/// Morphism set over which the leibniz <-> additivity dictionary is exact
/// for the given pairs: for each (u, v) it covers every object where any of
/// the three matrix lookups of the composition identity can be nonzero.
std::vector<Morphism> dictionary_morphisms(const GroupCtx& ctx, const SparseOperator& op,
                                           const std::vector<std::pair<Word, Word>>& pairs) {
    std::set<Morphism, MorphismLess> out;
    for (const auto& [u, v] : pairs) {
        Word w = ctx.multiply(u, v);
        std::set<Word, ShortlexLess> objects;
        for (const auto& [h, q] : op.column(w).terms()) {
            (void)q;
            objects.insert(ctx.multiply(ctx.inverse(w), h));
        }
        for (const auto& [h, q] : op.column(v).terms()) {
            (void)q;
            objects.insert(ctx.multiply(ctx.inverse(v), h));
        }
        for (const auto& [h, q] : op.column(u).terms()) {
            (void)q;
            objects.insert(ctx.conjugate(ctx.inverse(v), ctx.multiply(ctx.inverse(u), h)));
        }
        for (const Word& a : objects) {
            Morphism xi = make_morphism(ctx, a, v);
            out.insert(xi);
            out.insert(make_morphism(ctx, xi.target, u));
            out.insert(make_morphism(ctx, a, w));
        }
    }
    return {out.begin(), out.end()};
}

} // namespace

TEST_CASE("char_from_operator reads matrix coefficients") {
    const GroupCtx& ctx = f2();
    Ball dom = ball(ctx, 2);

    SparseOperator zero(&ctx);
    for (const Word& g : dom.elements) zero.set_column(g, AlgebraElement(&ctx));
    auto zt = char_from_operator(zero, fiber(ctx, ctx.parse("x1"), dom.elements));
    for (const auto& e : zt.entries()) CHECK(e.value.is_zero());

    SparseOperator op = ad(ctx, elem(ctx, "1*x1"), dom);
    Morphism plus = make_morphism(ctx, ctx.parse("x2^-1 x1 x2"), ctx.parse("x2"));
    CHECK(plus.target == ctx.parse("x1"));
    Morphism minus = make_morphism(ctx, ctx.parse("x1"), ctx.parse("x2"));
    auto table = char_from_operator(op, {plus, minus});
    CHECK(table.value(plus) == Rational(1));
    CHECK(table.value(minus) == Rational(-1));

    SparseOperator empty(&ctx);
    CHECK_THROWS_AS(char_from_operator(empty, {plus}), MissingColumnError);
}

TEST_CASE("operator_from_table round trips") {
    const GroupCtx& ctx = f2();
    Ball cols = ball(ctx, 2);
    SparseOperator op = ad(ctx, elem(ctx, "1*x1"), cols);

    std::vector<Morphism> morphisms;
    for (const Word& g : cols.elements) {
        std::set<Word, ShortlexLess> objects{ctx.parse("x1"),
                                             ctx.conjugate(ctx.inverse(g), ctx.parse("x1"))};
        for (const Word& a : ball(ctx, 1).elements) objects.insert(a);
        for (const Word& a : objects) morphisms.push_back(make_morphism(ctx, a, g));
    }
    CharacterTable table = char_from_operator(op, morphisms);
    SparseOperator rebuilt = operator_from_table(ctx, table, cols.elements);
    for (const Word& g : cols.elements) CHECK(rebuilt.column(g) == op.column(g));

    // Table -> operator -> table.
    CharacterTable table2 = char_from_operator(rebuilt, morphisms);
    for (const auto& e : table.entries()) CHECK(table2.value(e.morphism) == e.value);

    // All-zero coverage rebuilds the zero operator.
    SparseOperator zero(&ctx);
    for (const Word& g : cols.elements) zero.set_column(g, AlgebraElement(&ctx));
    SparseOperator zr = operator_from_table(
        ctx, char_from_operator(zero, morphisms), cols.elements);
    for (const Word& g : cols.elements) CHECK(zr.column(g).is_zero());

    // Missing coverage is an error, not silence.
    CharacterTable sparse_table(&ctx);
    sparse_table.insert(make_morphism(ctx, ctx.parse("x1"), ctx.parse("x2")), 1);
    CHECK_THROWS_AS(operator_from_table(ctx, sparse_table, {ctx.parse("x1")}),
                    DomainError);
}

TEST_CASE("identity-class table rebuilds the diagonal operator") {
    const GroupCtx& ctx = f2();
    Ball cols = ball(ctx, 2);
    CharacterTable table(&ctx);
    auto exp_sum_x1 = [](const Word& w) {
        std::int64_t s = 0;
        for (const Letter& l : w.letters())
            if (l.gen == 0) s += l.exp;
        return s;
    };
    for (const Word& g : cols.elements)
        table.insert(Morphism{Word::identity(), g, Word::identity()},
                     Rational(exp_sum_x1(g)));
    SparseOperator op = operator_from_table(ctx, table, cols.elements);
    for (const Word& g : cols.elements) {
        AlgebraElement expected =
            AlgebraElement::monomial(ctx, g, Rational(exp_sum_x1(g)));
        CHECK(op.column(g) == expected);
    }
}

TEST_CASE("additivity_check") {
    const GroupCtx& ctx = f2();

    // The character of an inner derivation is additive on a full component
    // enumeration.
    SparseOperator op = ad(ctx, elem(ctx, "1*x1"), ball(ctx, 2));
    auto mor = component_morphisms(ctx, ctx.parse("x1"), 2, 2);
    AdditivityReport good = additivity_check(ctx, char_from_operator(op, mor));
    CHECK(good.passed());
    CHECK(good.pairs_checked > 0);

    // The constant table 1 is not: 1 + 1 != 1.
    CharacterTable constant(&ctx);
    for (const Word& g : ball(ctx, 1).elements)
        constant.insert(Morphism{Word::identity(), g, Word::identity()}, 1);
    AdditivityReport bad = additivity_check(ctx, constant);
    CHECK(!bad.passed());
    CHECK(bad.violations.front().lhs != bad.violations.front().rhs);

    // The all-zero table is additive.
    CharacterTable zero(&ctx);
    for (const Word& g : ball(ctx, 1).elements)
        zero.insert(Morphism{Word::identity(), g, Word::identity()}, 0);
    CHECK(additivity_check(ctx, zero).passed());
}

TEST_CASE("inner_character values match the ad matrix description") {
    const GroupCtx& ctx = f2();
    Word a = ctx.parse("x1");
    Character chr = inner_character(ctx, a);

    // Zero on loops away from a and at a.
    CHECK(chr.evaluate(make_morphism(ctx, ctx.parse("x2"), ctx.parse("x2"))).is_zero());
    CHECK(chr.evaluate(make_morphism(ctx, a, ctx.parse("x1^2"))).is_zero());

    // +1 into a, -1 out of a.
    for (const Word& g : ball(ctx, 2).elements) {
        Word src = ctx.conjugate(ctx.inverse(g), a);
        Morphism into = make_morphism(ctx, src, g);
        Morphism out = make_morphism(ctx, a, g);
        if (src == a) {
            CHECK(chr.evaluate(into).is_zero());
        } else {
            CHECK(chr.evaluate(into) == Rational(1));
            CHECK(chr.evaluate(out) == Rational(-1));
        }
    }

    // Agreement with the extracted table of ad(a) over a component window.
    SparseOperator op = ad(ctx, AlgebraElement::monomial(ctx, a), ball(ctx, 2));
    for (const Morphism& m : component_morphisms(ctx, a, 2, 2)) {
        auto table = char_from_operator(op, {m});
        CHECK(table.value(m) == chr.evaluate(m));
    }
}

TEST_CASE("restrict_loops") {
    const GroupCtx& ctx = f2();

    // p_a of an inner character is identically zero.
    Character inner = inner_character(ctx, ctx.parse("x1"));
    for (const auto& e : restrict_loops(ctx, inner, ctx.parse("x1"), 3).entries())
        CHECK(e.value.is_zero());

    // p_e of the identity-class character reads off the exponent-sum
    // homomorphism on Mor(e, e) = G.
    Character idc(&ctx);
    idc.add_base(Word::identity(), 0, true, 1);
    auto loops = restrict_loops(ctx, idc, Word::identity(), 2);
    CHECK(loops.size() == ball(ctx, 2).size());
    for (const auto& e : loops.entries()) {
        std::int64_t s = 0;
        for (const Letter& l : e.morphism.witness.letters())
            if (l.gen == 0) s += l.exp;
        CHECK(e.value == Rational(s));
    }
}

TEST_CASE("local finiteness certificates") {
    const GroupCtx& ctx = f2();
    // The fiber over x2 carries +-1 at sources x2^-1 x1 x2 (length 3) and
    // x1, so the count stabilizes at 2 from radius 3 on.
    Character inner = inner_character(ctx, ctx.parse("x1"));
    LocalFinitenessReport r = local_finiteness_check(ctx, inner, ctx.parse("x2"), 4);
    CHECK(r.nonzero == 2);
    CHECK(r.stabilized);
    CHECK(!local_finiteness_check(ctx, inner, ctx.parse("x2"), 3).stabilized);

    Character zero(&ctx);
    LocalFinitenessReport rz = local_finiteness_check(ctx, zero, ctx.parse("x1"), 2);
    CHECK(rz.nonzero == 0);
    CHECK(rz.stabilized);

    auto ce = counterexample_f2();
    LocalFinitenessReport rc =
        local_finiteness_check(*ce.ctx, ce.character, ce.ctx->parse("x1"), 4);
    CHECK(rc.nonzero == 1);
    CHECK(rc.stabilized);
}

TEST_CASE("loop vanishing transfers to the whole class") {
    const GroupCtx& ctx = f2();
    Character inner = inner_character(ctx, ctx.parse("x1"));
    CHECK(loop_vanishing_transfer_check(ctx, inner, ctx.parse("x1"), 2, 2).passed());

    Character zero(&ctx);
    CHECK(loop_vanishing_transfer_check(ctx, zero, ctx.parse("x1"), 2, 2).passed());

    // One loop forced to 1 without additivity repair fails the scan.
    Character corrupted = inner_character(ctx, ctx.parse("x1"));
    corrupted.add_base(ctx.parse("x1"), 0, true, 1);
    LoopVanishingReport r =
        loop_vanishing_transfer_check(ctx, corrupted, ctx.parse("x1"), 2, 2);
    CHECK(!r.passed());
    bool at_x1 = false;
    for (const auto& v : r.violations)
        if (v.object == ctx.parse("x1")) at_x1 = true;
    CHECK(at_x1);
}

TEST_CASE("stabilizer extension") {
    const GroupCtx& ctx = f2();
    Word a = ctx.parse("x1");
    std::map<Word, Rational, ShortlexLess> chi;
    chi.emplace(a, Rational(1)); // chi(x1^k) = k

    StabilizerExtension ext = extend_from_stabilizer(ctx, a, chi, 2, 3);

    // g_{a,a} = e, so loops at the base read chi directly.
    CHECK(ext.transversal().at(a).is_identity());
    for (int k = -3; k <= 3; ++k) {
        Morphism loop = make_morphism(ctx, a, Word::power(0, k));
        CHECK(ext.evaluate(loop) == Rational(k));
    }
    CHECK(ext.evaluate(make_morphism(ctx, a, Word::power(0, 2))) == Rational(2));

    // Additivity on every composable pair of the materialized component.
    auto mor = component_morphisms(ctx, a, 2, 2);
    std::size_t pairs = 0;
    for (const Morphism& xi : mor)
        for (const Morphism& eta : mor) {
            if (eta.source != xi.target) continue;
            Morphism comp = compose(ctx, eta, xi);
            CHECK(ext.evaluate(comp) == ext.evaluate(eta) + ext.evaluate(xi));
            ++pairs;
        }
    CHECK(pairs > 0);

    // The materialized fragment agrees with the evaluator.
    CharacterTable table = ext.materialize(mor);
    for (const auto& e : table.entries()) CHECK(e.value == ext.evaluate(e.morphism));

    // chi == 0 extends to the zero fragment.
    std::map<Word, Rational, ShortlexLess> zero_chi;
    zero_chi.emplace(a, Rational(0));
    StabilizerExtension zext = extend_from_stabilizer(ctx, a, zero_chi, 2, 2);
    for (const auto& e : zext.materialize(mor).entries()) CHECK(e.value.is_zero());
}

TEST_CASE("stabilizer extension rejects bad chi") {
    const GroupCtx& ctx = f2();
    Word a = ctx.parse("x1");

    // A non-centralizing generator.
    std::map<Word, Rational, ShortlexLess> off;
    off.emplace(ctx.parse("x2"), Rational(1));
    CHECK_THROWS_AS(extend_from_stabilizer(ctx, a, off, 1, 1), DomainError);

    // Non-additive values: x1 -> 1 but x1^2 -> 5.
    std::map<Word, Rational, ShortlexLess> skew;
    skew.emplace(ctx.parse("x1"), Rational(1));
    skew.emplace(ctx.parse("x1^2"), Rational(5));
    CHECK_THROWS_AS(extend_from_stabilizer(ctx, a, skew, 1, 1), DomainError);

    // Morphism outside the materialized component.
    std::map<Word, Rational, ShortlexLess> chi;
    chi.emplace(a, Rational(1));
    StabilizerExtension ext = extend_from_stabilizer(ctx, a, chi, 1, 1);
    Word far = ctx.conjugate(ctx.parse("x2^3"), a);
    CHECK_THROWS_AS(ext.evaluate(make_morphism(ctx, far, ctx.parse("x1"))), DomainError);
}

TEST_CASE("ff_check passes for inner characters") {
    const GroupCtx& ctx = f2();
    Character inner = inner_character(ctx, ctx.parse("x1"));
    CHECK(ff_check(ctx, inner, ctx.parse("x1"), ctx.parse("x1"), 3).verdict ==
          FfVerdict::Pass);
    // The +1/-1 pair sits on one orbit and cancels along it.
    CHECK(ff_check(ctx, inner, ctx.parse("x2"), ctx.parse("x1"), 3).verdict ==
          FfVerdict::Pass);

    Character zero(&ctx);
    CHECK(ff_check(ctx, zero, ctx.parse("x2"), ctx.parse("x1"), 2).verdict ==
          FfVerdict::Pass);
}

TEST_CASE("ff_check is inconclusive when support touches the truncation edge") {
    const GroupCtx& ctx = f2();
    Character inner = inner_character(ctx, ctx.parse("x1"));
    // At radius 1 the +-1 values sit on the first/last materialized edges
    // of the x2-orbit, so the check must refuse to judge rather than fail.
    FfReport r = ff_check(ctx, inner, ctx.parse("x2"), ctx.parse("x1"), 1);
    CHECK(r.verdict == FfVerdict::InconclusiveTruncation);
    for (const auto& p : r.paths) CHECK(!p.violation);
}

TEST_CASE("the free-group counterexample") {
    auto ce = counterexample_f2();
    const GroupCtx& ctx = *ce.ctx;
    Word x1 = ctx.parse("x1");

    // The single base value sits where stated, with the target forced by
    // conjugation.
    Morphism supported = make_morphism(ctx, ctx.parse("x2 x1 x2^-1"), x1);
    CHECK(supported.target == ctx.parse("x1 x2 x1 x2^-1 x1^-1"));
    CHECK(ce.character.evaluate(supported) == Rational(1));

    // Additivity holds on a radius-3 component enumeration.
    auto mor = component_morphisms(ctx, x1, 3, 3);
    CharacterTable table(&ctx);
    for (const Morphism& m : mor) table.insert(m, ce.character.evaluate(m));
    CHECK(additivity_check(ctx, table).passed());

    // Loops at x1 all vanish.
    for (const auto& e : restrict_loops(ctx, ce.character, x1, 3).entries())
        CHECK(e.value.is_zero());

    // The path-sum check fails with exactly one offending path of sum 1.
    FfReport ff = ff_check(ctx, ce.character, x1, x1, 3);
    CHECK(ff.verdict == FfVerdict::Fail);
    std::size_t offending = 0;
    for (const auto& p : ff.paths)
        if (p.violation) {
            ++offending;
            CHECK(p.sum == Rational(1));
            CHECK(p.kind == PathKind::TruncatedPath);
        }
    CHECK(offending == 1);
}

TEST_CASE("identity_class_derivation") {
    const GroupCtx& ctx = f2();
    DerivationSpec zero = identity_class_derivation(ctx, {});
    CHECK(eval_word(zero, ctx.parse("x1 x2")).is_zero());

    DerivationSpec spec = identity_class_derivation(ctx, {{0, 1}, {1, 0}});
    CHECK(eval_word(spec, ctx.parse("x1 x2")) == elem(ctx, "1*x1 x2"));
    CHECK(eval_word(spec, ctx.parse("x1^2")) == elem(ctx, "2*x1^2"));
    // Diagonal matrix: the column at g is (exponent sum of x1 in g) * g.
    for (const Word& g : ball(ctx, 3).elements) {
        std::int64_t s = 0;
        for (const Letter& l : g.letters())
            if (l.gen == 0) s += l.exp;
        CHECK(eval_word(spec, g) == AlgebraElement::monomial(ctx, g, Rational(s)));
    }

    DerivationSpec zspec = identity_class_derivation(z2(), {{0, 2}, {1, 3}});
    CHECK(relator_consistency(zspec).passed());
    Ball zb = ball(z2(), 2);
    CHECK(leibniz_check(z2(), materialize(zspec, zb), in_ball_pairs(z2(), zb)).passed());

    // A relator with nonzero exponent sum rejects the hom.
    CHECK_THROWS_AS(identity_class_derivation(s3_table(), {{0, 1}}), DomainError);
}

TEST_CASE("dictionary soundness: leibniz passes iff the extracted table is additive") {
    const GroupCtx& ctx = f2();
    Ball b2 = ball(ctx, 2);
    auto pairs = in_ball_pairs(ctx, b2);

    // A derivation: both sides pass.
    SparseOperator good = ad(ctx, elem(ctx, "1*x1 - 2*x2"), b2);
    bool leib_good = leibniz_check(ctx, good, pairs).violations.empty();
    auto tbl_good = char_from_operator(good, dictionary_morphisms(ctx, good, pairs));
    CHECK(leib_good);
    CHECK(additivity_check(ctx, tbl_good).passed() == leib_good);

    // Corrupt one coefficient: both sides fail.
    SparseOperator bad = good;
    AlgebraElement col = bad.column(ctx.parse("x2"));
    col.add_term(ctx.parse("x1 x2"), 7);
    bad.set_column(ctx.parse("x2"), col);
    bool leib_bad = leibniz_check(ctx, bad, pairs).violations.empty();
    auto tbl_bad = char_from_operator(bad, dictionary_morphisms(ctx, bad, pairs));
    CHECK(!leib_bad);
    CHECK(additivity_check(ctx, tbl_bad).passed() == leib_bad);
}

#include "gader/character.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gader {

// ---------------------------------------------------------------------------
// Character

void Character::add_base(const Word& source, std::int32_t gen, bool positive,
                         const Rational& value) {
    if (!ctx_) throw Error("character has no context");
    if (gen < 0 || gen >= ctx_->num_generators())
        throw UnknownGeneratorError("unknown generator id " + std::to_string(gen));
    Word src = ctx_->normal_form(source);
    ElementaryKey key;
    Rational v = value;
    if (positive) {
        key = ElementaryKey{src, gen};
    } else {
        // (src -> b, wit g^-1) is the inverse of (b -> src, wit g).
        Word b = ctx_->conjugate(Word::power(gen, -1), src);
        key = ElementaryKey{b, gen};
        v = -v;
    }
    auto [it, fresh] = base_.emplace(key, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) base_.erase(it);
    }
}

Rational Character::base_value(const Word& source, std::int32_t gen) const {
    auto it = base_.find(ElementaryKey{source, gen});
    return it == base_.end() ? Rational(0) : it->second;
}

Rational Character::evaluate(const Morphism& m) const {
    if (!ctx_) throw Error("character has no context");
    const GroupCtx& ctx = *ctx_;
    validate_morphism(ctx, m);
    std::vector<Sym> syms = m.witness.flatten();
    Rational total = 0;
    Word cur = m.source;
    // The rightmost letter of the witness conjugates first.
    for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
        Sym s = *it;
        std::int32_t gen = sym_gen(s);
        if (sym_positive(s)) {
            total += base_value(cur, gen);
            cur = ctx.conjugate(Word::power(gen, 1), cur);
        } else {
            cur = ctx.conjugate(Word::power(gen, -1), cur);
            total -= base_value(cur, gen);
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// CharacterTable

std::vector<CharacterTable::Entry> CharacterTable::entries() const {
    std::vector<Entry> out;
    out.reserve(map_.size());
    for (const auto& [key, entry] : map_) out.push_back(entry);
    return out;
}

void CharacterTable::insert(const Morphism& m, const Rational& value) {
    if (!ctx_) throw Error("character table has no context");
    validate_morphism(*ctx_, m);
    map_[{m.source, m.witness}] = Entry{m, value};
}

std::optional<Rational> CharacterTable::value(const Word& source,
                                              const Word& witness) const {
    auto it = map_.find({source, witness});
    if (it == map_.end()) return std::nullopt;
    return it->second.value;
}

// ---------------------------------------------------------------------------
// Dictionary

CharacterTable char_from_operator(const SparseOperator& op,
                                  const std::vector<Morphism>& morphisms) {
    const GroupCtx& ctx = *op.ctx();
    CharacterTable table(&ctx);
    for (const Morphism& m : morphisms) {
        const AlgebraElement& col = op.column(m.witness);
        table.insert(m, col.coeff(ctx.multiply(m.witness, m.source)));
    }
    return table;
}

SparseOperator operator_from_table(const GroupCtx& ctx, const CharacterTable& table,
                                   const std::vector<Word>& columns) {
    SparseOperator op(&ctx);
    auto entries = table.entries();
    for (const Word& g_raw : columns) {
        Word g = ctx.normal_form(g_raw);
        bool covered = false;
        AlgebraElement col(&ctx);
        for (const auto& e : entries) {
            if (e.morphism.witness != g) continue;
            covered = true;
            col.add_term(ctx.multiply(g, e.morphism.source), e.value);
        }
        if (!covered)
            throw DomainError("character table has no coverage for column '" +
                              ctx.format(g) + "'");
        op.set_column(g, std::move(col));
    }
    return op;
}

AdditivityReport additivity_check(const GroupCtx& ctx, const CharacterTable& table) {
    AdditivityReport report;
    auto entries = table.entries();

    // Group entry indices by source object so composable partners of xi
    // (eta with eta.source == xi.target) are found directly.
    std::map<Word, std::vector<std::size_t>, ShortlexLess> by_source;
    for (std::size_t i = 0; i < entries.size(); ++i)
        by_source[entries[i].morphism.source].push_back(i);

    for (const auto& xi : entries) {
        auto it = by_source.find(xi.morphism.target);
        if (it == by_source.end()) continue;
        for (std::size_t j : it->second) {
            const auto& eta = entries[j];
            Word comp_witness = ctx.multiply(eta.morphism.witness, xi.morphism.witness);
            auto composite = table.value(xi.morphism.source, comp_witness);
            if (!composite) continue;
            ++report.pairs_checked;
            Rational rhs = eta.value + xi.value;
            if (*composite != rhs) {
                Morphism comp{xi.morphism.source, comp_witness, eta.morphism.target};
                report.violations.push_back(
                    {xi.morphism, eta.morphism, comp, *composite, rhs});
            }
        }
    }
    return report;
}

LocalFinitenessReport local_finiteness_check(const GroupCtx& ctx, const Character& chr,
                                             const Word& g, int object_radius) {
    LocalFinitenessReport report;
    auto count_over = [&](int radius) {
        std::size_t n = 0;
        for (const Word& a : ball(ctx, radius).elements)
            if (!chr.evaluate(make_morphism(ctx, a, g)).is_zero()) ++n;
        return n;
    };
    report.nonzero = count_over(object_radius);
    if (object_radius == kRadiusFull) {
        // Complete enumeration: the count is exact, not a heuristic.
        report.nonzero_prev = report.nonzero;
        report.stabilized = true;
    } else {
        report.nonzero_prev = object_radius >= 1 ? count_over(object_radius - 1) : 0;
        report.stabilized = object_radius >= 1 ? report.nonzero == report.nonzero_prev
                                               : report.nonzero == 0;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Inner characters, loops

Character inner_character(const GroupCtx& ctx, const Word& a) {
    Character chr(&ctx);
    Word base = ctx.normal_form(a);
    for (std::int32_t g = 0; g < ctx.num_generators(); ++g) {
        // +1 on (g^-1 a g -> a, wit g), -1 on (a -> g a g^-1, wit g);
        // the two cancel exactly when g commutes with a.
        chr.add_base(ctx.conjugate(Word::power(g, -1), base), g, true, 1);
        chr.add_base(base, g, true, -1);
    }
    return chr;
}

CharacterTable restrict_loops(const GroupCtx& ctx, const Character& chr, const Word& a,
                              int witness_radius, std::size_t cap) {
    Word base = ctx.normal_form(a);
    CharacterTable table(&ctx);
    for (const Word& w : centralizer_members(ctx, base, witness_radius, cap)) {
        Morphism loop{base, w, base};
        table.insert(loop, chr.evaluate(loop));
    }
    return table;
}

LoopVanishingReport loop_vanishing_transfer_check(const GroupCtx& ctx,
                                                  const Character& chr, const Word& a,
                                                  int object_radius, int witness_radius,
                                                  std::size_t cap) {
    LoopVanishingReport report;
    for (const Word& u : conjugacy_class_ball(ctx, ctx.normal_form(a), object_radius, cap)) {
        for (const Word& w : centralizer_members(ctx, u, witness_radius, cap)) {
            ++report.loops_checked;
            Rational v = chr.evaluate(Morphism{u, w, u});
            if (!v.is_zero()) report.violations.push_back({u, w, v});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Stabilizer extension

Rational StabilizerExtension::evaluate(const Morphism& m) const {
    const GroupCtx& ctx = *ctx_;
    validate_morphism(ctx, m);
    auto b_it = transversal_.find(m.source);
    auto c_it = transversal_.find(m.target);
    if (b_it == transversal_.end() || c_it == transversal_.end())
        throw DomainError("morphism endpoint outside the materialized component");
    // g_c^-1 x g_b conjugates the base to itself.
    Word z = ctx.multiply(ctx.multiply(ctx.inverse(c_it->second), m.witness),
                          b_it->second);
    if (ctx.conjugate(z, base_) != base_)
        throw Error("transversal defect: folded witness does not centralize the base");
    auto it = chi_closure_.find(z);
    if (it == chi_closure_.end())
        throw DomainError("centralizer element '" + ctx.format(z) +
                          "' is outside the chi domain closure");
    return it->second;
}

CharacterTable StabilizerExtension::materialize(
    const std::vector<Morphism>& morphisms) const {
    CharacterTable table(ctx_);
    for (const Morphism& m : morphisms) table.insert(m, evaluate(m));
    return table;
}

StabilizerExtension extend_from_stabilizer(const GroupCtx& ctx, const Word& a,
                                           const std::map<Word, Rational, ShortlexLess>& chi,
                                           int object_radius, int witness_radius,
                                           int chi_depth, std::size_t cap) {
    StabilizerExtension ext;
    ext.ctx_ = &ctx;
    ext.base_ = ctx.normal_form(a);

    for (const auto& [z, v] : chi) {
        if (ctx.conjugate(z, ext.base_) != ext.base_)
            throw DomainError("chi generator '" + ctx.format(z) +
                              "' does not centralize the base element");
        (void)v;
    }

    // Shortlex-least conjugator per class member; e conjugates a to a, so
    // the base gets the identity.
    for (const Word& g : ball(ctx, object_radius, cap).elements) {
        Word b = ctx.conjugate(g, ext.base_);
        ext.transversal_.try_emplace(b, g);
    }

    // Additive closure of chi, conflict-checked: a disagreement means chi
    // was not additive on the centralizer elements encountered.
    if (chi_depth <= 0) {
        if (object_radius == kRadiusFull || witness_radius == kRadiusFull)
            // Finite context: products of chi generators saturate within
            // the group order.
            chi_depth = ctx.table()
                            ? static_cast<int>(ctx.table()->elements.size()) + 1
                            : 16;
        else
            chi_depth = 2 * (object_radius + witness_radius) + 2;
    }
    ext.chi_closure_.emplace(Word::identity(), Rational(0));
    std::deque<std::pair<Word, int>> frontier{{Word::identity(), 0}};
    auto relax = [&](const Word& z, const Rational& val, int depth) {
        auto [it, fresh] = ext.chi_closure_.emplace(z, val);
        if (!fresh) {
            if (it->second != val)
                throw DomainError("chi is not additive: element '" + ctx.format(z) +
                                  "' received values " + it->second.str() + " and " +
                                  val.str());
            return;
        }
        if (ext.chi_closure_.size() > cap)
            throw CapError("chi closure exceeded the element cap");
        frontier.emplace_back(z, depth);
    };
    while (!frontier.empty()) {
        auto [z, depth] = frontier.front();
        frontier.pop_front();
        if (depth >= chi_depth) continue;
        Rational val = ext.chi_closure_.at(z);
        for (const auto& [gen_word, gen_val] : chi) {
            relax(ctx.multiply(z, gen_word), val + gen_val, depth + 1);
            relax(ctx.multiply(z, ctx.inverse(gen_word)), val - gen_val, depth + 1);
        }
    }
    return ext;
}

// ---------------------------------------------------------------------------
// Path-sum condition on conjugation graphs

FfReport ff_check(const GroupCtx& ctx, const Character& chr, const Word& g,
                  const Word& a, int object_radius, std::size_t cap) {
    FfReport report;
    ConjGraph graph = gamma_graph(ctx, g, a, object_radius, cap);

    bool any_violation = false;
    bool any_inconclusive = false;
    for (const ConjPath& p : graph.paths) {
        FfPath fp;
        fp.kind = p.kind;
        fp.sum = 0;
        for (std::size_t e : p.edge_indices) {
            Morphism m = graph.edge_morphism(e);
            Rational v = chr.evaluate(m);
            fp.sum += v;
            fp.edges.push_back(std::move(m));
            fp.values.push_back(v);
        }
        if (p.kind == PathKind::Cycle) {
            fp.judged = true;
        } else {
            // Support margin: the segment may only be judged when the
            // character visibly dies out before both truncation ends.
            fp.judged = fp.values.empty() ||
                        (fp.values.front().is_zero() && fp.values.back().is_zero());
        }
        fp.violation = fp.judged && !fp.sum.is_zero();
        any_violation |= fp.violation;
        any_inconclusive |= !fp.judged;
        report.paths.push_back(std::move(fp));
    }
    report.verdict = any_violation ? FfVerdict::Fail
                     : any_inconclusive ? FfVerdict::InconclusiveTruncation
                                        : FfVerdict::Pass;
    return report;
}

// ---------------------------------------------------------------------------
// Constructions

CounterexampleF2 counterexample_f2() {
    auto ctx = std::make_shared<const GroupCtx>(GroupCtx::free_group({"x1", "x2"}));
    Character chr(ctx.get());
    // x2 x1 x2^-1, conjugated by x1, reaches x1 x2 x1 x2^-1 x1^-1.
    Word source = Word::power(1, 1) * Word::power(0, 1) * Word::power(1, -1);
    chr.add_base(source, 0, true, 1);
    return CounterexampleF2{std::move(ctx), std::move(chr)};
}

DerivationSpec identity_class_derivation(const GroupCtx& ctx,
                                         const std::map<std::int32_t, Rational>& hom) {
    for (const auto& [gen, v] : hom) {
        (void)v;
        if (gen < 0 || gen >= ctx.num_generators())
            throw UnknownGeneratorError("unknown generator id " + std::to_string(gen));
    }
    auto hom_at = [&](std::int32_t gen) {
        auto it = hom.find(gen);
        return it == hom.end() ? Rational(0) : it->second;
    };
    for (const Word& r : ctx.relators()) {
        Rational sum = 0;
        for (const Letter& l : r.letters()) sum += Rational(l.exp) * hom_at(l.gen);
        if (!sum.is_zero())
            throw DomainError("hom does not extend to an additive map: relator '" +
                              ctx.format(r) + "' has exponent sum " + sum.str());
    }
    DerivationSpec spec;
    spec.ctx = &ctx;
    for (std::int32_t gen = 0; gen < ctx.num_generators(); ++gen) {
        Rational v = hom_at(gen);
        if (v.is_zero()) continue;
        spec.generator_values.emplace(
            gen, AlgebraElement::monomial(ctx, Word::power(gen, 1), v));
    }
    return spec;
}

} // namespace gader

#include "gader/operators.hpp"

namespace gader {

const AlgebraElement& SparseOperator::column(const Word& g) const {
    auto it = columns_.find(g);
    if (it == columns_.end())
        throw MissingColumnError("operator has no materialized column",
                                 ctx_ ? ctx_->format(g) : "?");
    return it->second;
}

AlgebraElement SparseOperator::column_or_zero(const Word& g) const {
    auto it = columns_.find(g);
    return it == columns_.end() ? AlgebraElement(ctx_) : it->second;
}

void SparseOperator::set_column(const Word& g, AlgebraElement value) {
    columns_[ctx_ ? ctx_->normal_form(g) : g] = std::move(value);
}

AlgebraElement apply(const SparseOperator& op, const AlgebraElement& u) {
    AlgebraElement out(op.ctx() ? op.ctx() : u.ctx());
    for (const auto& [g, coeff] : u.terms()) {
        const AlgebraElement& col = op.column(g);
        for (const auto& [h, c] : col.terms()) out.add_term(h, coeff * c);
    }
    return out;
}

SparseOperator ad(const GroupCtx& ctx, const AlgebraElement& a, const Ball& domain) {
    SparseOperator op(&ctx);
    for (const Word& g : domain.elements)
        op.set_column(g, commutator(a, AlgebraElement::monomial(ctx, g)));
    return op;
}

LeibnizReport leibniz_check(const GroupCtx& ctx, const SparseOperator& op,
                            const std::vector<std::pair<Word, Word>>& pairs) {
    LeibnizReport report;
    for (const auto& [u, v] : pairs) {
        ++report.pairs_checked;
        Word w = ctx.multiply(u, v);
        Word missing;
        if (!op.has_column(u)) missing = u;
        else if (!op.has_column(v)) missing = v;
        else if (!op.has_column(w)) missing = w;
        if (!op.has_column(u) || !op.has_column(v) || !op.has_column(w)) {
            report.missing.push_back({u, v, missing});
            continue;
        }
        AlgebraElement lhs = op.column(w);
        AlgebraElement rhs =
            convolve(op.column(u), AlgebraElement::monomial(ctx, v)) +
            convolve(AlgebraElement::monomial(ctx, u), op.column(v));
        if (lhs != rhs) report.violations.push_back({u, v, lhs, rhs});
    }
    return report;
}

std::vector<std::pair<Word, Word>> in_ball_pairs(const GroupCtx& ctx, const Ball& b) {
    std::vector<std::pair<Word, Word>> pairs;
    for (const Word& u : b.elements)
        for (const Word& v : b.elements)
            if (b.contains(ctx.multiply(u, v))) pairs.emplace_back(u, v);
    return pairs;
}

namespace {

/// X applied to one symbol: X(g) for positive, -g^-1 X(g) g^-1 for negative.
AlgebraElement eval_symbol(const DerivationSpec& spec, Sym s) {
    const GroupCtx& ctx = *spec.ctx;
    std::int32_t gen = sym_gen(s);
    if (gen < 0 || gen >= ctx.num_generators())
        throw UnknownGeneratorError("unknown generator id " + std::to_string(gen));
    auto it = spec.generator_values.find(gen);
    AlgebraElement xg = it == spec.generator_values.end() ? AlgebraElement(&ctx)
                                                          : it->second;
    if (sym_positive(s)) return xg;
    AlgebraElement inv = AlgebraElement::monomial(ctx, Word::power(gen, -1));
    return -convolve(convolve(inv, xg), inv);
}

} // namespace

AlgebraElement eval_word(const DerivationSpec& spec, const Word& w) {
    const GroupCtx& ctx = *spec.ctx;
    std::vector<Sym> syms = w.flatten();
    AlgebraElement out(&ctx);
    // X(s_1 ... s_n) = sum_i (s_1..s_{i-1}) X(s_i) (s_{i+1}..s_n).
    Word prefix = Word::identity();
    for (std::size_t i = 0; i < syms.size(); ++i) {
        Word suffix = Word::identity();
        for (std::size_t j = i + 1; j < syms.size(); ++j)
            suffix = suffix * Word::from_syms({syms[j]});
        AlgebraElement term = convolve(
            convolve(AlgebraElement::monomial(ctx, prefix), eval_symbol(spec, syms[i])),
            AlgebraElement::monomial(ctx, suffix));
        out = out + term;
        prefix = prefix * Word::from_syms({syms[i]});
    }
    return out;
}

AlgebraElement eval_element(const DerivationSpec& spec, const AlgebraElement& u) {
    AlgebraElement out(spec.ctx);
    for (const auto& [g, c] : u.terms()) out = out + scale(c, eval_word(spec, g));
    return out;
}

RelatorReport relator_consistency(const DerivationSpec& spec) {
    RelatorReport report;
    const auto& relators = spec.ctx->relators();
    for (std::size_t i = 0; i < relators.size(); ++i) {
        ++report.relators_checked;
        AlgebraElement v = eval_word(spec, relators[i]);
        if (!v.is_zero()) report.violations.push_back({i, relators[i], v});
    }
    return report;
}

SparseOperator materialize(const DerivationSpec& spec, const Ball& domain) {
    SparseOperator op(spec.ctx);
    for (const Word& g : domain.elements) op.set_column(g, eval_word(spec, g));
    return op;
}

SparseOperator lie_bracket(const GroupCtx& ctx, const SparseOperator& x,
                           const SparseOperator& y, const Ball& domain) {
    SparseOperator out(&ctx);
    for (const Word& g : domain.elements)
        out.set_column(g, apply(x, y.column(g)) - apply(y, x.column(g)));
    return out;
}

} // namespace gader

#include "gader/constraints.hpp"

#include <map>
#include <sstream>

namespace gader {

namespace {

struct ElementaryPairLess {
    bool operator()(const std::pair<Word, std::int32_t>& a,
                    const std::pair<Word, std::int32_t>& b) const {
        if (a.first != b.first) return shortlex_less(a.first, b.first);
        return a.second < b.second;
    }
};

} // namespace

std::size_t ConstraintSystem::interior_row_count() const {
    std::size_t n = 0;
    for (const ConstraintRow& r : rows)
        if (!r.boundary) ++n;
    return n;
}

std::vector<Morphism> relator_morphism_chain(const GroupCtx& ctx, const Word& relator,
                                             const Word& alpha) {
    ctx.normal_form(relator); // validates generator ids
    Word cur = ctx.normal_form(alpha);
    std::vector<Sym> syms = relator.flatten();
    std::vector<Morphism> chain;
    chain.reserve(syms.size());
    for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
        Word w = Word::from_syms({*it});
        Morphism m{cur, w, ctx.conjugate(w, cur)};
        cur = m.target;
        chain.push_back(std::move(m));
    }
    return chain;
}

ConstraintSystem build_system(const GroupCtx& ctx, int object_radius, std::size_t cap) {
    ConstraintSystem sys;
    sys.ctx = &ctx;
    sys.object_radius = object_radius;

    Ball objects = ball(ctx, object_radius, cap);
    std::map<std::pair<Word, std::int32_t>, std::size_t, ElementaryPairLess> index;
    for (const Word& obj : objects.elements)
        for (std::int32_t g = 0; g < ctx.num_generators(); ++g) {
            index.emplace(std::make_pair(obj, g), sys.unknowns.size());
            sys.unknowns.push_back({obj, g});
        }

    const auto& relators = ctx.relators();
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
        for (const Word& obj : objects.elements) {
            ConstraintRow row;
            row.relator_index = ri;
            row.object = obj;
            row.boundary = false;

            auto chain = relator_morphism_chain(ctx, relators[ri], obj);
            for (std::size_t pos = 0; pos < chain.size(); ++pos) {
                const Morphism& m = chain[pos];
                Sym s = m.witness.flatten().at(0);
                ConstraintTerm term;
                term.gen = sym_gen(s);
                term.chain_position = pos;
                if (sym_positive(s)) {
                    term.coeff = 1;
                    term.object = m.source;
                } else {
                    term.coeff = -1;
                    term.object = m.target;
                }
                auto it = index.find({term.object, term.gen});
                if (it == index.end())
                    row.boundary = true;
                else
                    term.unknown_index = it->second;
                row.terms.push_back(std::move(term));
            }

            if (!row.boundary) {
                std::map<std::size_t, Rational> combined;
                for (const ConstraintTerm& t : row.terms)
                    combined[*t.unknown_index] += t.coeff;
                for (const auto& [j, q] : combined)
                    if (!q.is_zero()) row.combined.emplace_back(j, q);
            }
            sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

SolveResult solve_system(const ConstraintSystem& system) {
    SolveResult out;
    std::vector<SparseRow> rows;
    for (const ConstraintRow& r : system.rows) {
        if (r.boundary) {
            ++out.boundary_rows;
            continue;
        }
        ++out.interior_rows;
        rows.push_back(r.combined);
    }
    out.basis = kernel_basis(rows, system.unknowns.size());
    out.rank = system.unknowns.size() - out.basis.size();
    return out;
}

ConstraintReport verify_character(const GroupCtx& ctx, const Character& chr,
                                  int object_radius, std::size_t cap) {
    ConstraintSystem sys = build_system(ctx, object_radius, cap);
    ConstraintReport report;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        const ConstraintRow& row = sys.rows[i];
        if (row.boundary) {
            ++report.boundary_skipped;
            continue;
        }
        ++report.rows_checked;
        Rational sum = 0;
        for (const ConstraintTerm& t : row.terms)
            sum += t.coeff * chr.base_value(t.object, t.gen);
        if (!sum.is_zero())
            report.violations.push_back({i, row.relator_index,
                                         ctx.relators()[row.relator_index], row.object,
                                         sum});
    }
    return report;
}

std::string to_matrix_market(const ConstraintSystem& system) {
    std::vector<const ConstraintRow*> interior;
    for (const ConstraintRow& r : system.rows)
        if (!r.boundary) interior.push_back(&r);

    std::size_t nnz = 0;
    for (const ConstraintRow* r : interior) nnz += r->combined.size();

    std::ostringstream os;
    os << "%%MatrixMarket matrix coordinate rational general\n";
    os << "% relator-additivity constraint rows (interior only); columns are\n";
    os << "% elementary-morphism unknowns, see the JSON legend\n";
    os << interior.size() << " " << system.unknowns.size() << " " << nnz << "\n";
    for (std::size_t i = 0; i < interior.size(); ++i)
        for (const auto& [j, q] : interior[i]->combined)
            os << (i + 1) << " " << (j + 1) << " " << q.str() << "\n";
    return os.str();
}

} // namespace gader

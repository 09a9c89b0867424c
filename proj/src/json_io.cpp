#include "gader/json_io.hpp"

namespace gader::jsonio {

namespace {

std::string fmt(const GroupCtx& ctx, const Word& w) { return ctx.format(w); }

const GroupCtx& ctx_of(const AlgebraElement& u) {
    if (!u.ctx()) throw Error("element has no context");
    return *u.ctx();
}

} // namespace

Json envelope(const std::string& kind, Json payload) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["kind"] = kind;
    for (auto& [k, v] : payload.items()) out[k] = std::move(v);
    return out;
}

Json element_json(const AlgebraElement& u) {
    Json terms = Json::array();
    for (const auto& [w, q] : u.terms()) {
        Json t;
        t["word"] = fmt(ctx_of(u), w);
        t["numerator"] = q.num();
        t["denominator"] = q.den();
        terms.push_back(std::move(t));
    }
    return terms;
}

AlgebraElement element_from_json(const GroupCtx& ctx, const Json& j) {
    AlgebraElement u(&ctx);
    if (j.is_string()) return parse_element(ctx, j.get<std::string>());
    for (const Json& t : j) {
        Rational q(t.at("numerator").get<std::int64_t>(),
                   t.at("denominator").get<std::int64_t>());
        u.add_term(ctx.parse(t.at("word").get<std::string>()), q);
    }
    return u;
}

Json operator_json(const SparseOperator& op) {
    Json cols = Json::array();
    for (const auto& [g, col] : op.columns()) {
        Json c;
        c["column_word"] = fmt(*op.ctx(), g);
        c["element"] = element_json(col);
        cols.push_back(std::move(c));
    }
    Json out;
    out["columns"] = std::move(cols);
    return out;
}

SparseOperator operator_from_json(const GroupCtx& ctx, const Json& j) {
    SparseOperator op(&ctx);
    const Json& cols = j.contains("columns") ? j.at("columns") : j;
    for (const Json& c : cols)
        op.set_column(ctx.parse(c.at("column_word").get<std::string>()),
                      element_from_json(ctx, c.at("element")));
    return op;
}

Json morphism_json(const GroupCtx& ctx, const Morphism& m) {
    Json out;
    out["source"] = fmt(ctx, m.source);
    out["witness"] = fmt(ctx, m.witness);
    out["target"] = fmt(ctx, m.target);
    return out;
}

Json leibniz_report_json(const GroupCtx& ctx, const LeibnizReport& r) {
    Json out;
    out["verdict"] = r.passed() ? "pass" : "fail";
    out["pairs_checked"] = r.pairs_checked;
    Json viols = Json::array();
    for (const auto& v : r.violations) {
        Json x;
        x["pair"] = Json::array({fmt(ctx, v.u), fmt(ctx, v.v)});
        x["lhs"] = element_json(v.lhs);
        x["rhs"] = element_json(v.rhs);
        viols.push_back(std::move(x));
    }
    out["violations"] = std::move(viols);
    Json missing = Json::array();
    for (const auto& m : r.missing) {
        Json x;
        x["pair"] = Json::array({fmt(ctx, m.u), fmt(ctx, m.v)});
        x["column"] = fmt(ctx, m.column);
        missing.push_back(std::move(x));
    }
    out["missing_columns"] = std::move(missing);
    return out;
}

Json relator_report_json(const GroupCtx& ctx, const RelatorReport& r) {
    Json out;
    out["verdict"] = r.passed() ? "pass" : "fail";
    out["relators_checked"] = r.relators_checked;
    Json viols = Json::array();
    for (const auto& v : r.violations) {
        Json x;
        x["relator_index"] = v.relator_index;
        x["relator"] = fmt(ctx, v.relator);
        x["value"] = element_json(v.value);
        viols.push_back(std::move(x));
    }
    out["violations"] = std::move(viols);
    return out;
}

Json character_json(const Character& chr) {
    const GroupCtx& ctx = *chr.ctx();
    Json base = Json::array();
    for (const auto& [key, v] : chr.base_values()) {
        Json x;
        x["source"] = fmt(ctx, key.source);
        x["witness"] = ctx.generator_names().at(static_cast<std::size_t>(key.gen));
        x["value"] = v.str();
        base.push_back(std::move(x));
    }
    Json out;
    out["base_values"] = std::move(base);
    return out;
}

Character character_from_json(const GroupCtx& ctx, const Json& j) {
    Character chr(&ctx);
    const Json& base = j.contains("base_values") ? j.at("base_values") : j;
    for (const Json& x : base) {
        Word wit = ctx.parse(x.at("witness").get<std::string>());
        if (wit.letters().size() != 1 ||
            (wit.letters()[0].exp != 1 && wit.letters()[0].exp != -1))
            throw ParseError("character base witness must be a single generator or "
                             "its inverse, got '" +
                                 x.at("witness").get<std::string>() + "'",
                             1, 1);
        chr.add_base(ctx.parse(x.at("source").get<std::string>()),
                     wit.letters()[0].gen, wit.letters()[0].exp == 1,
                     Rational::parse(x.at("value").get<std::string>()));
    }
    return chr;
}

Json table_json(const CharacterTable& table) {
    const GroupCtx& ctx = *table.ctx();
    Json entries = Json::array();
    for (const auto& e : table.entries()) {
        Json x = morphism_json(ctx, e.morphism);
        x["value"] = e.value.str();
        entries.push_back(std::move(x));
    }
    Json out;
    out["entries"] = std::move(entries);
    return out;
}

CharacterTable table_from_json(const GroupCtx& ctx, const Json& j) {
    CharacterTable table(&ctx);
    const Json& entries = j.contains("entries") ? j.at("entries") : j;
    for (const Json& x : entries) {
        Word src = ctx.parse(x.at("source").get<std::string>());
        Word wit = ctx.parse(x.at("witness").get<std::string>());
        table.insert(make_morphism(ctx, src, wit),
                     Rational::parse(x.at("value").get<std::string>()));
    }
    return table;
}

Json additivity_report_json(const GroupCtx& ctx, const AdditivityReport& r) {
    Json out;
    out["verdict"] = r.passed() ? "pass" : "fail";
    out["pairs_checked"] = r.pairs_checked;
    Json viols = Json::array();
    for (const auto& v : r.violations) {
        Json x;
        x["first"] = morphism_json(ctx, v.xi);
        x["second"] = morphism_json(ctx, v.eta);
        x["composite"] = morphism_json(ctx, v.composite);
        x["lhs"] = v.lhs.str();
        x["rhs"] = v.rhs.str();
        viols.push_back(std::move(x));
    }
    out["violations"] = std::move(viols);
    return out;
}

Json finiteness_report_json(const LocalFinitenessReport& r) {
    Json out;
    out["verdict"] = r.passed() ? "pass" : "inconclusive";
    out["nonzero_prev_radius"] = r.nonzero_prev;
    out["nonzero"] = r.nonzero;
    out["stabilized"] = r.stabilized;
    out["base_support_finite"] = r.base_finite;
    out["note"] = "stabilization between consecutive radii is a heuristic "
                  "certificate; finiteness of the base map is structural";
    return out;
}

Json loop_vanishing_report_json(const GroupCtx& ctx, const LoopVanishingReport& r) {
    Json out;
    out["verdict"] = r.passed() ? "pass" : "fail";
    out["loops_checked"] = r.loops_checked;
    Json viols = Json::array();
    for (const auto& v : r.violations) {
        Json x;
        x["object"] = fmt(ctx, v.object);
        x["witness"] = fmt(ctx, v.witness);
        x["value"] = v.value.str();
        viols.push_back(std::move(x));
    }
    out["violations"] = std::move(viols);
    return out;
}

Json ff_report_json(const GroupCtx& ctx, const FfReport& r) {
    Json out;
    switch (r.verdict) {
    case FfVerdict::Pass: out["verdict"] = "pass"; break;
    case FfVerdict::Fail: out["verdict"] = "fail"; break;
    case FfVerdict::InconclusiveTruncation: out["verdict"] = "inconclusive-truncation"; break;
    }
    Json paths = Json::array();
    for (const auto& p : r.paths) {
        Json x;
        x["classification"] = p.kind == PathKind::Cycle ? "cycle" : "truncated-path";
        x["judged"] = p.judged;
        x["violation"] = p.violation;
        x["sum"] = p.sum.str();
        Json edges = Json::array();
        for (const auto& m : p.edges) edges.push_back(morphism_json(ctx, m));
        x["edges"] = std::move(edges);
        Json values = Json::array();
        for (const auto& v : p.values) values.push_back(v.str());
        x["values"] = std::move(values);
        paths.push_back(std::move(x));
    }
    out["paths"] = std::move(paths);
    return out;
}

Json graph_json(const ConjGraph& g) {
    const GroupCtx& ctx = *g.ctx;
    Json out;
    out["mover"] = fmt(ctx, g.mover);
    out["base"] = fmt(ctx, g.base);
    Json vertices = Json::array();
    for (const Word& v : g.vertices) vertices.push_back(fmt(ctx, v));
    out["vertices"] = std::move(vertices);
    Json boundary = Json::array();
    for (const Word& v : g.boundary_vertices) boundary.push_back(fmt(ctx, v));
    out["boundary_vertices"] = std::move(boundary);
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json x;
        x["from"] = fmt(ctx, e.from);
        x["to"] = fmt(ctx, e.to);
        x["to_boundary"] = e.to_boundary;
        edges.push_back(std::move(x));
    }
    out["edges"] = std::move(edges);
    Json paths = Json::array();
    for (const auto& p : g.paths) {
        Json x;
        x["classification"] = p.kind == PathKind::Cycle ? "cycle" : "truncated-path";
        x["edge_indices"] = p.edge_indices;
        paths.push_back(std::move(x));
    }
    out["paths"] = std::move(paths);
    return out;
}

Json system_json(const ConstraintSystem& sys) {
    const GroupCtx& ctx = *sys.ctx;
    Json out;
    out["object_radius"] = sys.object_radius;
    Json unknowns = Json::array();
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
        Json x;
        x["index"] = i;
        x["object"] = fmt(ctx, sys.unknowns[i].object);
        x["generator"] =
            ctx.generator_names().at(static_cast<std::size_t>(sys.unknowns[i].gen));
        unknowns.push_back(std::move(x));
    }
    out["unknowns"] = std::move(unknowns);
    Json rows = Json::array();
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        const ConstraintRow& r = sys.rows[i];
        Json x;
        x["index"] = i;
        x["relator_index"] = r.relator_index;
        x["relator"] = fmt(ctx, ctx.relators()[r.relator_index]);
        x["object"] = fmt(ctx, r.object);
        x["boundary"] = r.boundary;
        Json terms = Json::array();
        for (const auto& t : r.terms) {
            Json y;
            y["coeff"] = t.coeff.str();
            y["object"] = fmt(ctx, t.object);
            y["generator"] = ctx.generator_names().at(static_cast<std::size_t>(t.gen));
            y["chain_position"] = t.chain_position;
            if (t.unknown_index) y["unknown_index"] = *t.unknown_index;
            terms.push_back(std::move(y));
        }
        x["terms"] = std::move(terms);
        rows.push_back(std::move(x));
    }
    out["rows"] = std::move(rows);
    return out;
}

Json solve_json(const ConstraintSystem& sys, const SolveResult& r) {
    Json out;
    out["unknowns"] = sys.unknowns.size();
    out["interior_rows"] = r.interior_rows;
    out["boundary_rows"] = r.boundary_rows;
    out["rank"] = r.rank;
    out["dimension"] = r.dimension();
    Json basis = Json::array();
    for (const auto& vec : r.basis) {
        Json v = Json::array();
        for (const Rational& q : vec) v.push_back(q.str());
        basis.push_back(std::move(v));
    }
    out["basis"] = std::move(basis);
    return out;
}

Json constraint_report_json(const GroupCtx& ctx, const ConstraintReport& r) {
    Json out;
    out["verdict"] = r.passed() ? "pass" : "fail";
    out["rows_checked"] = r.rows_checked;
    out["boundary_skipped"] = r.boundary_skipped;
    Json viols = Json::array();
    for (const auto& v : r.violations) {
        Json x;
        x["row_index"] = v.row_index;
        x["relator_index"] = v.relator_index;
        x["relator"] = fmt(ctx, v.relator);
        x["object"] = fmt(ctx, v.object);
        x["sum"] = v.sum.str();
        viols.push_back(std::move(x));
    }
    out["violations"] = std::move(viols);
    return out;
}

} // namespace gader::jsonio

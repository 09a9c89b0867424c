// gader: exact computation with derivations of group algebras, realized as
// additive characters on the groupoid of the adjoint action. Batch CLI over
// the library; all output goes to stdout, JSON with --json.

#include <fstream>
#include <iostream>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"

#include "gader/character.hpp"
#include "gader/constraints.hpp"
#include "gader/json_io.hpp"

using namespace gader;
using jsonio::Json;

namespace {

struct Options {
    std::string group_file;
    int radius = 2;
    std::optional<int> witness_radius;
    std::size_t cap = kDefaultCap;
    bool json = false;
    std::uint64_t seed = 1;
    std::string dot_file;

    int wradius() const { return witness_radius.value_or(radius); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

Json load_json(const std::string& path) {
    return Json::parse(slurp(path));
}

GroupCtx load_group(const Options& opt) {
    if (opt.group_file.empty())
        throw Error("this command needs a presentation file: --group <file>");
    GroupCtx ctx = parse_presentation(slurp(opt.group_file));
    // Full-radius enumeration asks for the whole group: close it into a
    // finite multiplication table first (errors loudly if it will not close).
    if (opt.radius == kRadiusFull || opt.witness_radius.value_or(0) == kRadiusFull)
        return materialize_table(ctx, opt.cap);
    return ctx;
}

void emit(const Options& opt, const std::string& kind, Json payload,
          const std::string& text) {
    if (opt.json)
        std::cout << jsonio::envelope(kind, std::move(payload)).dump(2) << "\n";
    else
        std::cout << text;
}

std::string verdict_str(bool pass) { return pass ? "pass" : "fail"; }

std::string error_type(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse-error";
    if (dynamic_cast<const ValidationError*>(&e)) return "validation-error";
    if (dynamic_cast<const CapError*>(&e)) return "cap-exceeded";
    if (dynamic_cast<const UnknownGeneratorError*>(&e)) return "unknown-generator";
    if (dynamic_cast<const CtxMismatchError*>(&e)) return "ctx-mismatch";
    if (dynamic_cast<const MissingColumnError*>(&e)) return "missing-column";
    if (dynamic_cast<const NonComposableError*>(&e)) return "non-composable";
    if (dynamic_cast<const OverflowError*>(&e)) return "overflow";
    if (dynamic_cast<const DomainError*>(&e)) return "domain-error";
    return "error";
}

SparseOperator load_operator(const GroupCtx& ctx, const std::string& path) {
    return jsonio::operator_from_json(ctx, load_json(path));
}

DerivationSpec load_spec(const GroupCtx& ctx, const std::string& path) {
    Json j = load_json(path);
    DerivationSpec spec;
    spec.ctx = &ctx;
    const Json& values = j.contains("generator_values") ? j.at("generator_values") : j;
    for (const Json& v : values) {
        std::string name = v.at("generator").get<std::string>();
        Word g = ctx.parse(name);
        if (g.letters().size() != 1 || g.letters()[0].exp != 1)
            throw ParseError("spec generator must be a single generator name, got '" +
                                 name + "'",
                             1, 1);
        spec.generator_values[g.letters()[0].gen] =
            jsonio::element_from_json(ctx, v.at("element"));
    }
    return spec;
}

Json spec_json(const DerivationSpec& spec) {
    Json values = Json::array();
    for (const auto& [gen, el] : spec.generator_values) {
        Json v;
        v["generator"] = spec.ctx->generator_names().at(static_cast<std::size_t>(gen));
        v["element"] = jsonio::element_json(el);
        values.push_back(std::move(v));
    }
    Json out;
    out["generator_values"] = std::move(values);
    return out;
}

Character load_character(const GroupCtx& ctx, const std::string& path) {
    return jsonio::character_from_json(ctx, load_json(path));
}

std::string report_text(const std::string& name, bool pass, std::size_t checked,
                        std::size_t violations) {
    return name + ": " + verdict_str(pass) + " (" + std::to_string(checked) +
           " checked, " + std::to_string(violations) + " violations)\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact derivations of group algebras via groupoid characters"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--group", opt.group_file, "presentation file (gens:/rel: format)");
    app.add_option("--radius", opt.radius, "object/ball radius (-1 = full group)");
    app.add_option("--witness-radius", opt.witness_radius, "witness ball radius");
    app.add_option("--cap", opt.cap, "enumeration element cap");
    app.add_flag("--json", opt.json, "machine-readable JSON output");
    app.add_option("--seed", opt.seed, "seed for randomized subcommands");

    // ---- group ----
    auto* grp = app.add_subcommand("group", "group element operations");
    grp->require_subcommand(1);
    std::string arg_w, arg_u, arg_v;

    auto* g_reduce = grp->add_subcommand("reduce", "normal form of a word");
    g_reduce->add_option("word", arg_w)->required();
    auto* g_mul = grp->add_subcommand("mul", "product of two words");
    g_mul->add_option("u", arg_u)->required();
    g_mul->add_option("v", arg_v)->required();
    auto* g_conj = grp->add_subcommand("conj", "conjugate g a g^-1");
    g_conj->add_option("g", arg_u)->required();
    g_conj->add_option("a", arg_v)->required();
    auto* g_ball = grp->add_subcommand("ball", "ball of the given radius");
    auto* g_class = grp->add_subcommand("class", "conjugacy-class ball");
    g_class->add_option("a", arg_w)->required();

    // ---- algebra ----
    auto* alg = app.add_subcommand("algebra", "group-algebra operations");
    alg->require_subcommand(1);
    auto* a_mul = alg->add_subcommand("mul", "convolution product");
    a_mul->add_option("u", arg_u)->required();
    a_mul->add_option("v", arg_v)->required();
    auto* a_comm = alg->add_subcommand("comm", "commutator u v - v u");
    a_comm->add_option("u", arg_u)->required();
    a_comm->add_option("v", arg_v)->required();

    // ---- deriv ----
    auto* der = app.add_subcommand("deriv", "derivation operators");
    der->require_subcommand(1);
    std::string op_file, op2_file, spec_file;
    auto* d_ad = der->add_subcommand("ad", "inner derivation over a ball");
    d_ad->add_option("u", arg_u, "algebra element")->required();
    auto* d_apply = der->add_subcommand("apply", "apply an operator");
    d_apply->add_option("--op", op_file)->required();
    d_apply->add_option("u", arg_u)->required();
    auto* d_leib = der->add_subcommand("leibniz", "Leibniz check on in-ball pairs");
    d_leib->add_option("--op", op_file)->required();
    auto* d_gens = der->add_subcommand("from-gens", "Leibniz extension from generators");
    d_gens->add_option("--spec", spec_file)->required();
    d_gens->add_option("word", arg_w)->required();
    auto* d_rel = der->add_subcommand("relcheck", "relator consistency of a spec");
    d_rel->add_option("--spec", spec_file)->required();
    auto* d_br = der->add_subcommand("bracket", "lie bracket of two operators");
    d_br->add_option("--op", op_file)->required();
    d_br->add_option("--op2", op2_file)->required();

    // ---- groupoid ----
    auto* gpd = app.add_subcommand("groupoid", "adjoint-action groupoid");
    gpd->require_subcommand(1);
    std::string arg_a2, arg_g2;
    auto* m_make = gpd->add_subcommand("morphism", "morphism from source and witness");
    m_make->add_option("a", arg_u)->required();
    m_make->add_option("g", arg_v)->required();
    auto* m_comp = gpd->add_subcommand("compose", "compose (first applied, then second)");
    m_comp->add_option("a1", arg_u, "first source")->required();
    m_comp->add_option("g1", arg_v, "first witness")->required();
    m_comp->add_option("a2", arg_a2, "second source")->required();
    m_comp->add_option("g2", arg_g2, "second witness")->required();
    auto* m_fiber = gpd->add_subcommand("fiber", "fiber H_g over the object ball");
    m_fiber->add_option("g", arg_w)->required();
    auto* m_cmp = gpd->add_subcommand("component", "morphisms of one class component");
    m_cmp->add_option("a", arg_w)->required();
    auto* m_gamma = gpd->add_subcommand("gamma", "conjugation graph with paths");
    m_gamma->add_option("g", arg_u)->required();
    m_gamma->add_option("a", arg_v)->required();
    m_gamma->add_option("--dot", opt.dot_file, "write GraphViz output to this file");

    // ---- char ----
    auto* chr = app.add_subcommand("char", "groupoid characters");
    chr->require_subcommand(1);
    std::string table_file, char_file, chi_file, hom_file, columns_arg;
    auto* c_extract = chr->add_subcommand("extract", "character table of an operator");
    c_extract->add_option("--op", op_file)->required();
    auto* c_rebuild = chr->add_subcommand("rebuild", "operator from a character table");
    c_rebuild->add_option("--table", table_file)->required();
    c_rebuild->add_option("--columns", columns_arg, "comma-separated column words");
    auto* c_add = chr->add_subcommand("additivity", "additivity check on a table");
    c_add->add_option("--table", table_file)->required();
    auto* c_fin = chr->add_subcommand("finiteness", "local finiteness on one fiber");
    c_fin->add_option("--char", char_file)->required();
    c_fin->add_option("g", arg_w)->required();
    auto* c_inner = chr->add_subcommand("inner", "character of an inner derivation");
    c_inner->add_option("a", arg_w)->required();
    auto* c_restrict = chr->add_subcommand("restrict", "restriction to loops at a");
    c_restrict->add_option("--char", char_file)->required();
    c_restrict->add_option("a", arg_w)->required();
    auto* c_ext = chr->add_subcommand("extend-stab", "extend a centralizer character");
    c_ext->add_option("a", arg_w)->required();
    c_ext->add_option("--chi", chi_file, "JSON {word: rational} centralizer values")
        ->required();
    auto* c_ff = chr->add_subcommand("ff", "path-sum condition on a conjugation graph");
    c_ff->add_option("--char", char_file)->required();
    c_ff->add_option("g", arg_u)->required();
    c_ff->add_option("a", arg_v)->required();
    auto* c_idc = chr->add_subcommand("identity-class", "diagonal derivation from a hom");
    c_idc->add_option("--hom", hom_file, "JSON {generator: rational}")->required();

    // ---- constraints ----
    auto* con = app.add_subcommand("constraints", "relator-induced linear systems");
    con->require_subcommand(1);
    std::string mm_file;
    auto* k_build = con->add_subcommand("build", "build the constraint system");
    k_build->add_option("--mm", mm_file, "write Matrix Market text to this file");
    auto* k_solve = con->add_subcommand("solve", "solution-space basis");
    auto* k_verify = con->add_subcommand("verify", "evaluate rows at a character");
    k_verify->add_option("--char", char_file)->required();

    // ---- demo ----
    auto* demo = app.add_subcommand("demo", "built-in demonstrations");
    demo->require_subcommand(1);
    auto* d_counter = demo->add_subcommand(
        "counterexample", "locally finite character failing the path-sum condition");

    // Global flags remain usable after any subcommand.
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; }))
            allow_fallthrough(s);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        // ---- group ----
        if (g_reduce->parsed() || g_mul->parsed() || g_conj->parsed() ||
            g_ball->parsed() || g_class->parsed()) {
            GroupCtx ctx = load_group(opt);
            if (g_reduce->parsed()) {
                Word w = ctx.parse(arg_w);
                emit(opt, "word", Json{{"word", ctx.format(w)}}, ctx.format(w) + "\n");
            } else if (g_mul->parsed()) {
                Word w = ctx.multiply(ctx.parse(arg_u), ctx.parse(arg_v));
                emit(opt, "word", Json{{"word", ctx.format(w)}}, ctx.format(w) + "\n");
            } else if (g_conj->parsed()) {
                Word w = ctx.conjugate(ctx.parse(arg_u), ctx.parse(arg_v));
                emit(opt, "word", Json{{"word", ctx.format(w)}}, ctx.format(w) + "\n");
            } else if (g_ball->parsed()) {
                Ball b = ball(ctx, opt.radius, opt.cap);
                Json words = Json::array();
                std::string text;
                for (const Word& w : b.elements) {
                    words.push_back(ctx.format(w));
                    text += ctx.format(w) + "\n";
                }
                emit(opt, "ball",
                     Json{{"radius", opt.radius}, {"size", b.size()}, {"elements", words}},
                     text);
            } else {
                auto cls = conjugacy_class_ball(ctx, ctx.parse(arg_w), opt.radius, opt.cap);
                Json words = Json::array();
                std::string text;
                for (const Word& w : cls) {
                    words.push_back(ctx.format(w));
                    text += ctx.format(w) + "\n";
                }
                emit(opt, "class-ball",
                     Json{{"radius", opt.radius}, {"size", cls.size()}, {"members", words}},
                     text);
            }
            return 0;
        }

        // ---- algebra ----
        if (a_mul->parsed() || a_comm->parsed()) {
            GroupCtx ctx = load_group(opt);
            AlgebraElement u = parse_element(ctx, arg_u);
            AlgebraElement v = parse_element(ctx, arg_v);
            AlgebraElement r = a_mul->parsed() ? convolve(u, v) : commutator(u, v);
            emit(opt, "element", Json{{"element", jsonio::element_json(r)}},
                 format_element(r) + "\n");
            return 0;
        }

        // ---- deriv ----
        if (d_ad->parsed()) {
            GroupCtx ctx = load_group(opt);
            SparseOperator op =
                ad(ctx, parse_element(ctx, arg_u), ball(ctx, opt.radius, opt.cap));
            emit(opt, "operator", jsonio::operator_json(op),
                 "operator with " + std::to_string(op.columns().size()) + " columns\n");
            return 0;
        }
        if (d_apply->parsed()) {
            GroupCtx ctx = load_group(opt);
            AlgebraElement r = apply(load_operator(ctx, op_file), parse_element(ctx, arg_u));
            emit(opt, "element", Json{{"element", jsonio::element_json(r)}},
                 format_element(r) + "\n");
            return 0;
        }
        if (d_leib->parsed()) {
            GroupCtx ctx = load_group(opt);
            SparseOperator op = load_operator(ctx, op_file);
            LeibnizReport r =
                leibniz_check(ctx, op, in_ball_pairs(ctx, ball(ctx, opt.radius, opt.cap)));
            emit(opt, "leibniz-report", jsonio::leibniz_report_json(ctx, r),
                 report_text("leibniz", r.passed(), r.pairs_checked, r.violations.size()));
            return r.passed() ? 0 : 1;
        }
        if (d_gens->parsed()) {
            GroupCtx ctx = load_group(opt);
            AlgebraElement r = eval_word(load_spec(ctx, spec_file), ctx.parse(arg_w));
            emit(opt, "element", Json{{"element", jsonio::element_json(r)}},
                 format_element(r) + "\n");
            return 0;
        }
        if (d_rel->parsed()) {
            GroupCtx ctx = load_group(opt);
            RelatorReport r = relator_consistency(load_spec(ctx, spec_file));
            emit(opt, "relator-report", jsonio::relator_report_json(ctx, r),
                 report_text("relator consistency", r.passed(), r.relators_checked,
                             r.violations.size()));
            return r.passed() ? 0 : 1;
        }
        if (d_br->parsed()) {
            GroupCtx ctx = load_group(opt);
            SparseOperator r =
                lie_bracket(ctx, load_operator(ctx, op_file), load_operator(ctx, op2_file),
                            ball(ctx, opt.radius, opt.cap));
            emit(opt, "operator", jsonio::operator_json(r),
                 "operator with " + std::to_string(r.columns().size()) + " columns\n");
            return 0;
        }

        // ---- groupoid ----
        if (m_make->parsed()) {
            GroupCtx ctx = load_group(opt);
            Morphism m = make_morphism(ctx, ctx.parse(arg_u), ctx.parse(arg_v));
            emit(opt, "morphism", jsonio::morphism_json(ctx, m),
                 ctx.format(m.source) + " --[" + ctx.format(m.witness) + "]--> " +
                     ctx.format(m.target) + "\n");
            return 0;
        }
        if (m_comp->parsed()) {
            GroupCtx ctx = load_group(opt);
            Morphism first = make_morphism(ctx, ctx.parse(arg_u), ctx.parse(arg_v));
            Morphism second = make_morphism(ctx, ctx.parse(arg_a2), ctx.parse(arg_g2));
            Morphism m = compose(ctx, second, first);
            emit(opt, "morphism", jsonio::morphism_json(ctx, m),
                 ctx.format(m.source) + " --[" + ctx.format(m.witness) + "]--> " +
                     ctx.format(m.target) + "\n");
            return 0;
        }
        if (m_fiber->parsed()) {
            GroupCtx ctx = load_group(opt);
            auto ms = fiber(ctx, ctx.parse(arg_w), ball(ctx, opt.radius, opt.cap).elements);
            Json arr = Json::array();
            std::string text;
            for (const Morphism& m : ms) {
                arr.push_back(jsonio::morphism_json(ctx, m));
                text += ctx.format(m.source) + " --> " + ctx.format(m.target) + "\n";
            }
            emit(opt, "fiber", Json{{"morphisms", arr}}, text);
            return 0;
        }
        if (m_cmp->parsed()) {
            GroupCtx ctx = load_group(opt);
            auto ms = component_morphisms(ctx, ctx.parse(arg_w), opt.radius, opt.wradius(),
                                          opt.cap);
            Json arr = Json::array();
            for (const Morphism& m : ms) arr.push_back(jsonio::morphism_json(ctx, m));
            emit(opt, "component", Json{{"count", ms.size()}, {"morphisms", arr}},
                 std::to_string(ms.size()) + " morphisms\n");
            return 0;
        }
        if (m_gamma->parsed()) {
            GroupCtx ctx = load_group(opt);
            ConjGraph g =
                gamma_graph(ctx, ctx.parse(arg_u), ctx.parse(arg_v), opt.radius, opt.cap);
            if (!opt.dot_file.empty()) {
                std::ofstream out(opt.dot_file);
                if (!out) throw Error("cannot write '" + opt.dot_file + "'");
                out << to_dot(g);
            }
            emit(opt, "gamma-graph", jsonio::graph_json(g),
                 std::to_string(g.vertices.size()) + " vertices, " +
                     std::to_string(g.paths.size()) + " paths\n");
            return 0;
        }

        // ---- char ----
        if (c_extract->parsed()) {
            GroupCtx ctx = load_group(opt);
            SparseOperator op = load_operator(ctx, op_file);
            std::vector<Morphism> ms;
            for (const auto& [g, col] : op.columns()) {
                (void)col;
                for (const Word& a : ball(ctx, opt.radius, opt.cap).elements)
                    ms.push_back(make_morphism(ctx, a, g));
            }
            CharacterTable t = char_from_operator(op, ms);
            emit(opt, "character-table", jsonio::table_json(t),
                 std::to_string(t.size()) + " table entries\n");
            return 0;
        }
        if (c_rebuild->parsed()) {
            GroupCtx ctx = load_group(opt);
            CharacterTable t = jsonio::table_from_json(ctx, load_json(table_file));
            std::vector<Word> cols;
            if (!columns_arg.empty()) {
                std::string cur;
                for (char c : columns_arg + ",") {
                    if (c == ',') {
                        if (!cur.empty()) cols.push_back(ctx.parse(cur));
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
            } else {
                std::set<Word, ShortlexLess> wits;
                for (const auto& e : t.entries()) wits.insert(e.morphism.witness);
                cols.assign(wits.begin(), wits.end());
            }
            SparseOperator op = operator_from_table(ctx, t, cols);
            emit(opt, "operator", jsonio::operator_json(op),
                 "operator with " + std::to_string(op.columns().size()) + " columns\n");
            return 0;
        }
        if (c_add->parsed()) {
            GroupCtx ctx = load_group(opt);
            AdditivityReport r =
                additivity_check(ctx, jsonio::table_from_json(ctx, load_json(table_file)));
            emit(opt, "additivity-report", jsonio::additivity_report_json(ctx, r),
                 report_text("additivity", r.passed(), r.pairs_checked,
                             r.violations.size()));
            return r.passed() ? 0 : 1;
        }
        if (c_fin->parsed()) {
            GroupCtx ctx = load_group(opt);
            LocalFinitenessReport r = local_finiteness_check(
                ctx, load_character(ctx, char_file), ctx.parse(arg_w), opt.radius);
            emit(opt, "finiteness-report", jsonio::finiteness_report_json(r),
                 "fiber nonzero count: " + std::to_string(r.nonzero) +
                     (r.stabilized ? " (stabilized)\n" : " (not stabilized)\n"));
            return 0;
        }
        if (c_inner->parsed()) {
            GroupCtx ctx = load_group(opt);
            Character c = inner_character(ctx, ctx.parse(arg_w));
            emit(opt, "character", jsonio::character_json(c),
                 std::to_string(c.base_values().size()) + " base values\n");
            return 0;
        }
        if (c_restrict->parsed()) {
            GroupCtx ctx = load_group(opt);
            CharacterTable t = restrict_loops(ctx, load_character(ctx, char_file),
                                              ctx.parse(arg_w), opt.wradius(), opt.cap);
            emit(opt, "character-table", jsonio::table_json(t),
                 std::to_string(t.size()) + " loop values\n");
            return 0;
        }
        if (c_ext->parsed()) {
            GroupCtx ctx = load_group(opt);
            Json cj = load_json(chi_file);
            std::map<Word, Rational, ShortlexLess> chi;
            for (auto& [k, v] : cj.items())
                chi.emplace(ctx.parse(k), Rational::parse(v.get<std::string>()));
            StabilizerExtension ext = extend_from_stabilizer(
                ctx, ctx.parse(arg_w), chi, opt.radius, opt.wradius(), 0, opt.cap);
            auto ms = component_morphisms(ctx, ctx.parse(arg_w), opt.radius, opt.wradius(),
                                          opt.cap);
            CharacterTable t = ext.materialize(ms);
            Json transversal = Json::array();
            for (const auto& [b, g] : ext.transversal()) {
                Json x;
                x["member"] = ctx.format(b);
                x["conjugator"] = ctx.format(g);
                transversal.push_back(std::move(x));
            }
            Json payload = jsonio::table_json(t);
            payload["transversal"] = std::move(transversal);
            emit(opt, "character-table", payload,
                 std::to_string(t.size()) + " extended values\n");
            return 0;
        }
        if (c_ff->parsed()) {
            GroupCtx ctx = load_group(opt);
            FfReport r = ff_check(ctx, load_character(ctx, char_file), ctx.parse(arg_u),
                                  ctx.parse(arg_v), opt.radius, opt.cap);
            std::string verdict = r.verdict == FfVerdict::Pass ? "pass"
                                  : r.verdict == FfVerdict::Fail
                                      ? "fail"
                                      : "inconclusive-truncation";
            emit(opt, "ff-report", jsonio::ff_report_json(ctx, r),
                 "ff: " + verdict + " (" + std::to_string(r.paths.size()) + " paths)\n");
            return r.verdict == FfVerdict::Fail ? 1 : 0;
        }
        if (c_idc->parsed()) {
            GroupCtx ctx = load_group(opt);
            Json hj = load_json(hom_file);
            std::map<std::int32_t, Rational> hom;
            for (auto& [k, v] : hj.items()) {
                Word g = ctx.parse(k);
                if (g.letters().size() != 1 || g.letters()[0].exp != 1)
                    throw ParseError("hom keys must be generator names", 1, 1);
                hom[g.letters()[0].gen] = Rational::parse(v.get<std::string>());
            }
            DerivationSpec spec = identity_class_derivation(ctx, hom);
            emit(opt, "derivation-spec", spec_json(spec),
                 std::to_string(spec.generator_values.size()) +
                     " generator values (diagonal derivation)\n");
            return 0;
        }

        // ---- constraints ----
        if (k_build->parsed()) {
            GroupCtx ctx = load_group(opt);
            ConstraintSystem sys = build_system(ctx, opt.radius, opt.cap);
            if (!mm_file.empty()) {
                std::ofstream out(mm_file);
                if (!out) throw Error("cannot write '" + mm_file + "'");
                out << to_matrix_market(sys);
            }
            emit(opt, "constraint-system", jsonio::system_json(sys),
                 std::to_string(sys.rows.size()) + " rows over " +
                     std::to_string(sys.unknowns.size()) + " unknowns\n");
            return 0;
        }
        if (k_solve->parsed()) {
            GroupCtx ctx = load_group(opt);
            ConstraintSystem sys = build_system(ctx, opt.radius, opt.cap);
            SolveResult r = solve_system(sys);
            emit(opt, "constraint-basis", jsonio::solve_json(sys, r),
                 "solution space dimension " + std::to_string(r.dimension()) + " (" +
                     std::to_string(r.interior_rows) + " interior rows, " +
                     std::to_string(r.boundary_rows) + " boundary rows)\n");
            return 0;
        }
        if (k_verify->parsed()) {
            GroupCtx ctx = load_group(opt);
            ConstraintReport r = verify_character(ctx, load_character(ctx, char_file),
                                                  opt.radius, opt.cap);
            emit(opt, "constraint-report", jsonio::constraint_report_json(ctx, r),
                 report_text("constraints", r.passed(), r.rows_checked,
                             r.violations.size()));
            return r.passed() ? 0 : 1;
        }

        // ---- demo ----
        if (d_counter->parsed()) {
            int radius = opt.radius < 3 ? 3 : opt.radius;
            auto ce = counterexample_f2();
            const GroupCtx& ctx = *ce.ctx;
            Word x1 = ctx.parse("x1");

            auto ms = component_morphisms(ctx, x1, radius, radius, opt.cap);
            CharacterTable table(&ctx);
            for (const Morphism& m : ms) table.insert(m, ce.character.evaluate(m));
            AdditivityReport add = additivity_check(ctx, table);

            bool loops_zero = true;
            for (const auto& e : restrict_loops(ctx, ce.character, x1, radius).entries())
                loops_zero &= e.value.is_zero();

            FfReport ff = ff_check(ctx, ce.character, x1, x1, radius, opt.cap);
            Rational path_sum = 0;
            std::size_t offending = 0;
            for (const auto& p : ff.paths)
                if (p.violation) {
                    ++offending;
                    path_sum = p.sum;
                }

            bool as_expected = add.passed() && loops_zero &&
                               ff.verdict == FfVerdict::Fail && offending == 1 &&
                               path_sum == Rational(1);
            Json payload;
            payload["additivity"] = verdict_str(add.passed());
            payload["loops_at_x1"] = loops_zero ? "zero" : "nonzero";
            payload["ff"] = ff.verdict == FfVerdict::Fail ? "fail" : "not-fail";
            payload["ff_offending_paths"] = offending;
            payload["ff_path_sum"] = path_sum.str();
            payload["radius"] = radius;
            emit(opt, "counterexample", payload,
                 std::string("additivity: ") + verdict_str(add.passed()) +
                     "\nloops at x1: " + (loops_zero ? "zero" : "nonzero") + "\nff: " +
                     (ff.verdict == FfVerdict::Fail ? "fail (as constructed)"
                                                    : "unexpected") +
                     ", offending path sum " + path_sum.str() + "\n");
            return as_expected ? 0 : 1;
        }

        throw Error("no subcommand handled");
    } catch (const std::exception& e) {
        if (opt.json) {
            Json err;
            err["type"] = error_type(e);
            err["message"] = e.what();
            std::cout << jsonio::envelope("error", Json{{"error", err}}).dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }

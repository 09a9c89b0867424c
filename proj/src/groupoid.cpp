#include "gader/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gader {

Morphism make_morphism(const GroupCtx& ctx, const Word& a, const Word& g) {
    Word src = ctx.normal_form(a);
    Word wit = ctx.normal_form(g);
    return Morphism{src, wit, ctx.conjugate(wit, src)};
}

void validate_morphism(const GroupCtx& ctx, const Morphism& m) {
    if (ctx.conjugate(m.witness, m.source) != m.target)
        throw Error("invalid morphism: witness does not conjugate source to target");
}

Morphism compose(const GroupCtx& ctx, const Morphism& eta, const Morphism& xi) {
    if (eta.source != xi.target)
        throw NonComposableError("morphisms do not compose: first target '" +
                                 ctx.format(xi.target) + "' != second source '" +
                                 ctx.format(eta.source) + "'");
    Morphism out{xi.source, ctx.multiply(eta.witness, xi.witness), eta.target};
    validate_morphism(ctx, out);
    return out;
}

Morphism invert(const GroupCtx& ctx, const Morphism& xi) {
    Morphism out{xi.target, ctx.inverse(xi.witness), xi.source};
    validate_morphism(ctx, out);
    return out;
}

std::vector<Morphism> fiber(const GroupCtx& ctx, const Word& g,
                            const std::vector<Word>& objects) {
    std::vector<Morphism> out;
    out.reserve(objects.size());
    for (const Word& a : objects) out.push_back(make_morphism(ctx, a, g));
    std::sort(out.begin(), out.end(), MorphismLess{});
    return out;
}

std::vector<Morphism> component_morphisms(const GroupCtx& ctx, const Word& a,
                                          int object_radius, int witness_radius,
                                          std::size_t cap) {
    std::vector<Word> members = conjugacy_class_ball(ctx, a, object_radius, cap);
    std::set<Word, ShortlexLess> member_set(members.begin(), members.end());
    Ball witnesses = ball(ctx, witness_radius, cap);

    std::vector<Morphism> out;
    for (const Word& b : members) {
        for (const Word& g : witnesses.elements) {
            Word t = ctx.conjugate(g, b);
            if (member_set.count(t)) out.push_back(Morphism{b, g, t});
            if (out.size() > cap)
                throw CapError("component enumeration exceeded the element cap");
        }
    }
    std::sort(out.begin(), out.end(), MorphismLess{});
    return out;
}

Morphism ConjGraph::edge_morphism(std::size_t edge_index) const {
    const ConjEdge& e = edges.at(edge_index);
    return Morphism{e.from, mover, e.to};
}

ConjGraph gamma_graph(const GroupCtx& ctx, const Word& g, const Word& a,
                      int object_radius, std::size_t cap) {
    ConjGraph graph;
    graph.ctx = &ctx;
    graph.mover = ctx.normal_form(g);
    graph.base = ctx.normal_form(a);
    graph.vertices = conjugacy_class_ball(ctx, graph.base, object_radius, cap);

    std::map<Word, std::size_t, ShortlexLess> vertex_index;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        vertex_index.emplace(graph.vertices[i], i);

    std::set<Word, ShortlexLess> boundary;
    graph.edges.reserve(graph.vertices.size());
    for (const Word& b : graph.vertices) {
        Word t = ctx.conjugate(graph.mover, b);
        bool outside = vertex_index.find(t) == vertex_index.end();
        if (outside) boundary.insert(t);
        graph.edges.push_back(ConjEdge{b, t, outside});
    }
    graph.boundary_vertices.assign(boundary.begin(), boundary.end());

    // Orbit decomposition. Conjugation by g is injective, so a vertex has
    // an in-ball predecessor iff g^-1 v g is itself a vertex.
    Word mover_inv = ctx.inverse(graph.mover);
    auto has_inside_pred = [&](const Word& v) {
        return vertex_index.count(ctx.conjugate(mover_inv, v)) != 0;
    };

    std::vector<bool> visited(graph.vertices.size(), false);
    auto walk = [&](std::size_t start, PathKind kind) {
        ConjPath path;
        path.kind = kind;
        std::size_t cur = start;
        while (true) {
            if (visited[cur]) break; // closed the cycle
            visited[cur] = true;
            path.edge_indices.push_back(cur);
            const ConjEdge& e = graph.edges[cur];
            if (e.to_boundary) break;
            cur = vertex_index.at(e.to);
        }
        graph.paths.push_back(std::move(path));
    };

    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        if (!visited[i] && !has_inside_pred(graph.vertices[i]))
            walk(i, PathKind::TruncatedPath);
    for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        if (!visited[i]) walk(i, PathKind::Cycle);

    return graph;
}

std::string to_dot(const ConjGraph& graph) {
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    const GroupCtx& ctx = *graph.ctx;

    std::map<Word, std::string, ShortlexLess> node_id;
    std::size_t counter = 0;
    auto id_of = [&](const Word& w) {
        auto it = node_id.find(w);
        if (it != node_id.end()) return it->second;
        std::string id = "n" + std::to_string(counter++);
        node_id.emplace(w, id);
        return id;
    };

    std::ostringstream os;
    os << "digraph gamma {\n";
    os << "  label=\"conjugation by " << ctx.format(graph.mover) << " on class of "
       << ctx.format(graph.base) << "\";\n";
    for (const Word& v : graph.vertices)
        os << "  " << id_of(v) << " [label=\"" << ctx.format(v) << "\"];\n";
    for (const Word& v : graph.boundary_vertices)
        os << "  " << id_of(v) << " [label=\"" << ctx.format(v)
           << "\", style=dashed, color=gray];\n";

    std::vector<std::size_t> path_of_edge(graph.edges.size(), 0);
    for (std::size_t p = 0; p < graph.paths.size(); ++p)
        for (std::size_t e : graph.paths[p].edge_indices) path_of_edge[e] = p;

    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const ConjEdge& e = graph.edges[i];
        std::size_t p = path_of_edge[i];
        const char* color = kPalette[p % (sizeof(kPalette) / sizeof(kPalette[0]))];
        os << "  " << id_of(e.from) << " -> " << id_of(e.to) << " [label=\""
           << ctx.format(graph.mover) << "\", color=\"" << color << "\"";
        if (graph.paths[p].kind == PathKind::TruncatedPath) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace gader

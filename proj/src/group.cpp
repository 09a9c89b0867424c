#include "gader/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gader {

// ---------------------------------------------------------------------------
// FiniteTable

void FiniteTable::build_index() const {
    if (!index_.empty() || elements.empty()) return;
    for (std::size_t i = 0; i < elements.size(); ++i)
        index_.emplace(elements[i], static_cast<std::int32_t>(i));
}

std::int32_t FiniteTable::index_of(const Word& w) const {
    build_index();
    auto it = index_.find(w);
    if (it == index_.end())
        throw DomainError("word is not an element of the finite table");
    return it->second;
}

void FiniteTable::validate(std::int32_t num_gens) const {
    const std::size_t n = elements.size();
    if (n == 0) throw ValidationError("finite table has no elements");
    if (table.size() != n || inverse.size() != n)
        throw ValidationError("finite table is not total");
    if (identity < 0 || static_cast<std::size_t>(identity) >= n ||
        !elements[static_cast<std::size_t>(identity)].is_identity())
        throw ValidationError("finite table identity index is wrong");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw ValidationError("finite table row is not total");
        for (std::int32_t v : table[i])
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw ValidationError("finite table entry out of range");
        if (table[i][static_cast<std::size_t>(identity)] != static_cast<std::int32_t>(i) ||
            table[static_cast<std::size_t>(identity)][i] != static_cast<std::int32_t>(i))
            throw ValidationError("finite table identity is not two-sided");
        std::int32_t inv = inverse[i];
        if (inv < 0 || static_cast<std::size_t>(inv) >= n ||
            table[i][static_cast<std::size_t>(inv)] != identity ||
            table[static_cast<std::size_t>(inv)][i] != identity)
            throw ValidationError("finite table inverses are wrong");
    }
    if (generator_index.size() != static_cast<std::size_t>(num_gens))
        throw ValidationError("finite table is missing generator indices");
    for (std::int32_t g : generator_index)
        if (g < 0 || static_cast<std::size_t>(g) >= n)
            throw ValidationError("finite table generator index out of range");
}

// ---------------------------------------------------------------------------
// GroupCtx

void GroupCtx::init_names(std::vector<std::string> names) {
    names_ = std::move(names);
    if (names_.empty()) throw ValidationError("a presentation needs at least one generator");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw ValidationError("empty generator name");
        if (!ids_.emplace(names_[i], static_cast<std::int32_t>(i)).second)
            throw ValidationError("duplicate generator name '" + names_[i] + "'");
    }
}

GroupCtx GroupCtx::free_group(std::vector<std::string> generator_names) {
    GroupCtx ctx;
    ctx.kind_ = StrategyKind::FreeGroup;
    ctx.init_names(std::move(generator_names));
    return ctx;
}

GroupCtx GroupCtx::from_presentation(std::vector<std::string> generator_names,
                                     std::vector<Word> relators,
                                     const KbOptions& opts) {
    if (relators.empty()) return free_group(std::move(generator_names));
    GroupCtx ctx;
    ctx.kind_ = StrategyKind::ConfluentRewriting;
    ctx.init_names(std::move(generator_names));
    for (const Word& r : relators) ctx.check_word(r);
    ctx.relators_ = std::move(relators);
    ctx.rewrite_ = std::make_shared<const RewriteSystem>(
        RewriteSystem::complete(ctx.num_generators(), ctx.relators_, opts));
    return ctx;
}

GroupCtx GroupCtx::with_rules(std::vector<std::string> generator_names,
                              std::vector<Word> relators,
                              std::vector<RewriteRule> rules) {
    GroupCtx ctx;
    ctx.kind_ = StrategyKind::ConfluentRewriting;
    ctx.init_names(std::move(generator_names));
    for (const Word& r : relators) ctx.check_word(r);
    ctx.relators_ = std::move(relators);
    auto rs = std::make_shared<RewriteSystem>(ctx.num_generators(), std::move(rules));
    std::string why;
    if (!rs->is_locally_confluent(&why))
        throw ValidationError("supplied rules are not locally confluent: " + why);
    ctx.rewrite_ = std::move(rs);
    return ctx;
}

GroupCtx GroupCtx::with_table(std::vector<std::string> generator_names,
                              std::vector<Word> relators, FiniteTable table) {
    GroupCtx ctx;
    ctx.kind_ = StrategyKind::FiniteTable;
    ctx.init_names(std::move(generator_names));
    ctx.relators_ = std::move(relators);
    table.validate(ctx.num_generators());
    ctx.table_ = std::make_shared<const FiniteTable>(std::move(table));
    return ctx;
}

void GroupCtx::check_word(const Word& w) const {
    for (const Letter& l : w.letters())
        if (l.gen < 0 || l.gen >= num_generators())
            throw UnknownGeneratorError("unknown generator id " + std::to_string(l.gen));
}

Word GroupCtx::normal_form(const Word& w) const {
    check_word(w);
    switch (kind_) {
    case StrategyKind::FreeGroup:
        return w; // Words are freely reduced by construction.
    case StrategyKind::ConfluentRewriting:
        return rewrite_->normal_form(w);
    case StrategyKind::FiniteTable: {
        const FiniteTable& t = *table_;
        std::int32_t idx = t.identity;
        for (const Letter& l : w.letters()) {
            std::int32_t gi = t.generator_index[static_cast<std::size_t>(l.gen)];
            std::int32_t step = l.exp > 0 ? gi : t.inverse[static_cast<std::size_t>(gi)];
            std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
            for (std::int64_t i = 0; i < n; ++i)
                idx = t.table[static_cast<std::size_t>(idx)][static_cast<std::size_t>(step)];
        }
        return t.elements[static_cast<std::size_t>(idx)];
    }
    }
    throw Error("unreachable strategy");
}

Word GroupCtx::multiply(const Word& u, const Word& v) const {
    return normal_form(u * v);
}

Word GroupCtx::inverse(const Word& u) const {
    return normal_form(u.inverse());
}

Word GroupCtx::conjugate(const Word& g, const Word& a) const {
    return normal_form(g * a * g.inverse());
}

Word GroupCtx::generator(std::int32_t i) const {
    if (i < 0 || i >= num_generators())
        throw UnknownGeneratorError("unknown generator id " + std::to_string(i));
    return Word::power(i, 1);
}

Word GroupCtx::parse(const std::string& text) const {
    return normal_form(parse_word(text, ids_));
}

std::string GroupCtx::format(const Word& w) const {
    return format_word(w, names_);
}

// ---------------------------------------------------------------------------
// Presentation text

namespace {

struct Pos {
    int line;
    int col;
};

std::vector<std::pair<std::string, Pos>> split_statements(const std::string& text) {
    std::vector<std::pair<std::string, Pos>> out;
    std::string cur;
    Pos start{1, 1};
    int line = 1, col = 1;
    bool in_comment = false;
    auto flush = [&]() {
        if (cur.find_first_not_of(" \t\r") != std::string::npos)
            out.emplace_back(cur, start);
        cur.clear();
    };
    for (char c : text) {
        if (c == '\n') {
            flush();
            in_comment = false;
            ++line;
            col = 1;
            start = {line, col};
            continue;
        }
        if (c == '#') in_comment = true;
        if (!in_comment) {
            if (cur.empty()) start = {line, col};
            if (c == ';') {
                flush();
                start = {line, col + 1};
            } else {
                cur += c;
            }
        }
        ++col;
    }
    flush();
    return out;
}

} // namespace

GroupCtx parse_presentation(const std::string& text, const KbOptions& opts) {
    std::vector<std::string> names;
    std::vector<std::string> relator_texts;
    std::vector<Pos> relator_pos;
    bool have_gens = false;

    for (const auto& [stmt, pos] : split_statements(text)) {
        std::size_t colon = stmt.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'gens:' or 'rel:' statement", pos.line, pos.col);
        std::string key = stmt.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  key.end());
        std::string body = stmt.substr(colon + 1);
        if (key == "gens" || key == "generators") {
            if (have_gens) throw ParseError("duplicate gens statement", pos.line, pos.col);
            have_gens = true;
            std::string cur;
            for (char c : body + " ") {
                if (std::isspace(static_cast<unsigned char>(c))) {
                    if (!cur.empty()) names.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
        } else if (key == "rel" || key == "relators") {
            std::string cur;
            for (char c : body + ",") {
                if (c == ',') {
                    if (cur.find_first_not_of(" \t") != std::string::npos) {
                        relator_texts.push_back(cur);
                        relator_pos.push_back(pos);
                    }
                    cur.clear();
                } else {
                    cur += c;
                }
            }
        } else {
            throw ParseError("unknown statement '" + key + "'", pos.line, pos.col);
        }
    }
    if (!have_gens) throw ParseError("presentation has no gens statement", 1, 1);

    std::map<std::string, std::int32_t> ids;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!ids.emplace(names[i], static_cast<std::int32_t>(i)).second)
            throw ParseError("duplicate generator '" + names[i] + "'", 1, 1);
    }

    std::vector<Word> relators;
    for (std::size_t i = 0; i < relator_texts.size(); ++i) {
        try {
            Word r = parse_word(relator_texts[i], ids);
            if (!r.is_identity()) relators.push_back(r);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()) + " in relator", relator_pos[i].line,
                             relator_pos[i].col);
        }
    }
    return GroupCtx::from_presentation(std::move(names), std::move(relators), opts);
}

// ---------------------------------------------------------------------------
// Enumeration

GroupCtx materialize_table(const GroupCtx& ctx, std::size_t cap) {
    std::set<Word, ShortlexLess> seen;
    std::vector<Word> frontier{Word::identity()};
    seen.insert(Word::identity());
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (std::int32_t g = 0; g < ctx.num_generators(); ++g) {
                for (std::int64_t e : {std::int64_t{1}, std::int64_t{-1}}) {
                    Word v = ctx.multiply(w, Word::power(g, e));
                    if (seen.insert(v).second) {
                        next.push_back(v);
                        if (seen.size() > cap)
                            throw CapError(
                                "group closure exceeded " + std::to_string(cap) +
                                " elements; the group may be infinite");
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    FiniteTable t;
    t.elements.assign(seen.begin(), seen.end());
    const std::size_t n = t.elements.size();
    std::map<Word, std::int32_t, ShortlexLess> index;
    for (std::size_t i = 0; i < n; ++i)
        index.emplace(t.elements[i], static_cast<std::int32_t>(i));
    t.identity = index.at(Word::identity());
    t.table.assign(n, std::vector<std::int32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t.table[i][j] = index.at(ctx.multiply(t.elements[i], t.elements[j]));
    t.inverse.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        t.inverse[i] = index.at(ctx.inverse(t.elements[i]));
    t.generator_index.reserve(static_cast<std::size_t>(ctx.num_generators()));
    for (std::int32_t g = 0; g < ctx.num_generators(); ++g)
        t.generator_index.push_back(index.at(ctx.normal_form(Word::power(g, 1))));

    return GroupCtx::with_table(std::vector<std::string>(ctx.generator_names()),
                                std::vector<Word>(ctx.relators()), std::move(t));
}

bool Ball::contains(const Word& w) const {
    return std::binary_search(elements.begin(), elements.end(), w, ShortlexLess{});
}

Ball ball(const GroupCtx& ctx, int radius, std::size_t cap) {
    Ball b;
    b.ctx = &ctx;
    b.radius = radius;
    if (radius == kRadiusFull) {
        if (ctx.strategy() != StrategyKind::FiniteTable)
            throw ValidationError("full-radius enumeration requires a finite table context");
        b.elements = ctx.table()->elements;
        if (b.elements.size() > cap)
            throw CapError("ball exceeded the element cap");
        return b;
    }
    if (radius < 0) throw Error("ball radius must be >= 0 (or full)");

    std::set<Word, ShortlexLess> seen;
    seen.insert(Word::identity());
    std::vector<Word> frontier{Word::identity()};
    for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (std::int32_t g = 0; g < ctx.num_generators(); ++g) {
                for (std::int64_t e : {std::int64_t{1}, std::int64_t{-1}}) {
                    Word v = ctx.multiply(w, Word::power(g, e));
                    if (seen.insert(v).second) {
                        next.push_back(v);
                        if (seen.size() > cap)
                            throw CapError("ball of radius " + std::to_string(radius) +
                                           " exceeded " + std::to_string(cap) + " elements");
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    b.elements.assign(seen.begin(), seen.end());
    return b;
}

std::vector<Word> conjugacy_class_ball(const GroupCtx& ctx, const Word& a, int radius,
                                       std::size_t cap) {
    Ball b = ball(ctx, radius, cap);
    std::set<Word, ShortlexLess> out;
    for (const Word& g : b.elements) out.insert(ctx.conjugate(g, a));
    return std::vector<Word>(out.begin(), out.end());
}

std::vector<Word> centralizer_members(const GroupCtx& ctx, const Word& a, int radius,
                                      std::size_t cap) {
    Ball b = ball(ctx, radius, cap);
    std::vector<Word> out;
    for (const Word& g : b.elements)
        if (ctx.multiply(g, a) == ctx.multiply(a, g)) out.push_back(g);
    return out;
}

} // namespace gader

#include "gader/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace gader {

bool shortlex_less_str(const SymStr& a, const SymStr& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool matches_at(const SymStr& s, std::size_t pos, const SymStr& pat) {
    if (pos + pat.size() > s.size()) return false;
    return std::equal(pat.begin(), pat.end(), s.begin() + static_cast<std::ptrdiff_t>(pos));
}

SymStr reduce_with(const std::vector<RewriteRule>& rules, std::size_t max_lhs,
                   SymStr s) {
    // Leftmost reduction with a local restart: after a rewrite at `pos`,
    // new redexes can only start at pos - max_lhs + 1 or later.
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool fired = false;
        for (const RewriteRule& r : rules) {
            if (!matches_at(s, pos, r.lhs)) continue;
            SymStr next;
            next.reserve(s.size() - r.lhs.size() + r.rhs.size());
            next.insert(next.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(pos));
            next.insert(next.end(), r.rhs.begin(), r.rhs.end());
            next.insert(next.end(), s.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()),
                        s.end());
            s = std::move(next);
            pos = pos >= max_lhs ? pos - max_lhs + 1 : 0;
            fired = true;
            break;
        }
        if (!fired) ++pos;
    }
    return s;
}

SymStr concat3(const SymStr& a, const SymStr& b, const SymStr& c) {
    SymStr out;
    out.reserve(a.size() + b.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

SymStr slice(const SymStr& s, std::size_t from, std::size_t to) {
    return SymStr(s.begin() + static_cast<std::ptrdiff_t>(from),
                  s.begin() + static_cast<std::ptrdiff_t>(to));
}

std::string str_repr(const SymStr& s) {
    std::string out;
    for (Sym x : s) {
        if (!out.empty()) out += ' ';
        out += "g" + std::to_string(sym_gen(x)) + (sym_positive(x) ? "" : "'");
    }
    return out.empty() ? "e" : out;
}

/// Enumerates the critical pairs of rules (i, j): proper overlaps where a
/// suffix of lhs_i is a prefix of lhs_j, and containments of lhs_j in
/// lhs_i. Calls fn(left, right) for each superposition reduced both ways.
template <typename Fn>
void for_critical_pairs(const RewriteRule& ri, const RewriteRule& rj,
                        bool same_rule, Fn&& fn) {
    const SymStr& l1 = ri.lhs;
    const SymStr& l2 = rj.lhs;
    // Proper overlap: l1 = u v, l2 = v w with v nonempty, u and w not both
    // covering (k strictly smaller than both lengths).
    std::size_t kmax = std::min(l1.size(), l2.size()) - 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (!std::equal(l2.begin(), l2.begin() + static_cast<std::ptrdiff_t>(k),
                        l1.end() - static_cast<std::ptrdiff_t>(k)))
            continue;
        SymStr tail = slice(l2, k, l2.size());
        SymStr left = concat3(ri.rhs, tail, {});
        SymStr head = slice(l1, 0, l1.size() - k);
        SymStr right = concat3(head, rj.rhs, {});
        fn(left, right);
    }
    // Containment: l2 occurs inside l1.
    if (l2.size() <= l1.size()) {
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
            if (same_rule && p == 0 && l2.size() == l1.size()) continue;
            if (!matches_at(l1, p, l2)) continue;
            SymStr right = concat3(slice(l1, 0, p), rj.rhs,
                                   slice(l1, p + l2.size(), l1.size()));
            fn(ri.rhs, right);
        }
    }
}

} // namespace

std::vector<RewriteRule> RewriteSystem::free_rules(std::int32_t num_gens) {
    std::vector<RewriteRule> rules;
    rules.reserve(static_cast<std::size_t>(num_gens) * 2);
    for (std::int32_t g = 0; g < num_gens; ++g) {
        Sym pos = sym_make(g, true), neg = sym_make(g, false);
        rules.push_back({{pos, neg}, {}});
        rules.push_back({{neg, pos}, {}});
    }
    return rules;
}

RewriteSystem::RewriteSystem(std::int32_t num_gens, std::vector<RewriteRule> rules)
    : num_gens_(num_gens) {
    rules_ = free_rules(num_gens);
    for (RewriteRule& r : rules) {
        bool is_free = r.lhs.size() == 2 && r.rhs.empty() &&
                       r.lhs[0] == sym_inverse(r.lhs[1]);
        if (is_free) continue;
        for (Sym s : r.lhs)
            if (sym_gen(s) < 0 || sym_gen(s) >= num_gens)
                throw ValidationError("rewrite rule uses unknown generator");
        for (Sym s : r.rhs)
            if (sym_gen(s) < 0 || sym_gen(s) >= num_gens)
                throw ValidationError("rewrite rule uses unknown generator");
        if (!shortlex_less_str(r.rhs, r.lhs))
            throw ValidationError(
                "rewrite rule is not shortlex-decreasing: " + str_repr(r.lhs) +
                " -> " + str_repr(r.rhs));
        rules_.push_back(std::move(r));
    }
    for (const RewriteRule& r : rules_) max_lhs_ = std::max(max_lhs_, r.lhs.size());
}

SymStr RewriteSystem::reduce(SymStr s) const {
    return reduce_with(rules_, max_lhs_, std::move(s));
}

Word RewriteSystem::normal_form(const Word& w) const {
    return Word::from_syms(reduce(w.flatten()));
}

bool RewriteSystem::is_locally_confluent(std::string* counterexample) const {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            bool ok = true;
            for_critical_pairs(rules_[i], rules_[j], i == j,
                               [&](const SymStr& a, const SymStr& b) {
                                   if (!ok) return;
                                   if (reduce(a) != reduce(b)) ok = false;
                               });
            if (!ok) {
                if (counterexample)
                    *counterexample = "rules '" + str_repr(rules_[i].lhs) +
                                      "' and '" + str_repr(rules_[j].lhs) +
                                      "' have an unjoinable critical pair";
                return false;
            }
        }
    }
    return true;
}

RewriteSystem RewriteSystem::complete(std::int32_t num_gens,
                                      const std::vector<Word>& relators,
                                      const KbOptions& opts) {
    struct Candidate {
        SymStr a, b;
    };

    std::vector<RewriteRule> active = free_rules(num_gens);
    std::size_t max_lhs = 2;
    std::deque<Candidate> queue;
    for (const Word& r : relators) queue.push_back({r.flatten(), {}});

    auto reduce_all = [&](SymStr s) { return reduce_with(active, max_lhs, std::move(s)); };

    std::size_t processed = 0;
    while (!queue.empty()) {
        if (++processed > opts.max_pending)
            throw ValidationError(
                "Knuth-Bendix completion exceeded its pending-pair cap (" +
                std::to_string(opts.max_pending) +
                "); the presentation may not admit a finite confluent system "
                "at this size");
        Candidate c = queue.front();
        queue.pop_front();
        SymStr a = reduce_all(std::move(c.a));
        SymStr b = reduce_all(std::move(c.b));
        if (a == b) continue;
        if (shortlex_less_str(a, b)) std::swap(a, b);
        RewriteRule fresh{std::move(a), std::move(b)};

        // Collapse: existing rules reducible by the fresh rule go back to
        // the queue as equations.
        std::vector<RewriteRule> kept;
        kept.reserve(active.size() + 1);
        std::vector<RewriteRule> collapsed;
        for (RewriteRule& r : active) {
            bool lhs_hit = false;
            for (std::size_t p = 0; p + fresh.lhs.size() <= r.lhs.size() && !lhs_hit; ++p)
                lhs_hit = matches_at(r.lhs, p, fresh.lhs);
            if (lhs_hit && r.lhs != fresh.lhs)
                collapsed.push_back(std::move(r));
            else
                kept.push_back(std::move(r));
        }
        active = std::move(kept);
        active.push_back(fresh);
        max_lhs = 0;
        for (const RewriteRule& r : active) max_lhs = std::max(max_lhs, r.lhs.size());
        for (RewriteRule& r : collapsed) queue.push_back({std::move(r.lhs), std::move(r.rhs)});

        if (active.size() > opts.max_rules)
            throw ValidationError(
                "Knuth-Bendix completion exceeded its rule cap (" +
                std::to_string(opts.max_rules) +
                "); the presentation may not admit a finite confluent system "
                "at this size");

        // Right-hand sides stay reduced with respect to the current system.
        for (RewriteRule& r : active) r.rhs = reduce_with(active, max_lhs, std::move(r.rhs));

        const RewriteRule& nr = active.back();
        for (const RewriteRule& r : active) {
            for_critical_pairs(nr, r, &nr == &r,
                               [&](const SymStr& x, const SymStr& y) {
                                   queue.push_back({x, y});
                               });
            if (&nr != &r)
                for_critical_pairs(r, nr, false,
                                   [&](const SymStr& x, const SymStr& y) {
                                       queue.push_back({x, y});
                                   });
        }
    }

    // Strip the free rules; the constructor re-adds them.
    std::vector<RewriteRule> user;
    for (RewriteRule& r : active) {
        bool is_free = r.lhs.size() == 2 && r.rhs.empty() &&
                       r.lhs[0] == sym_inverse(r.lhs[1]);
        if (!is_free) user.push_back(std::move(r));
    }
    RewriteSystem rs(num_gens, std::move(user));
    std::string why;
    if (!rs.is_locally_confluent(&why))
        throw ValidationError("completion produced a non-confluent system: " + why);
    return rs;
}

} // namespace gader

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gader/word.hpp"

namespace gader {

/// Flattened symbol string.
using SymStr = std::vector<Sym>;

/// One rewrite rule lhs -> rhs with rhs strictly below lhs in shortlex.
struct RewriteRule {
    SymStr lhs;
    SymStr rhs;
};

bool shortlex_less_str(const SymStr& a, const SymStr& b);

struct KbOptions {
    std::size_t max_rules = 4000;
    std::size_t max_pending = 200000; ///< cap on processed critical pairs
};

/// A terminating string-rewriting system over the symbols of `num_gens`
/// generators. The free-cancellation rules x x^-1 -> e are always part of
/// the system. Every rule is shortlex-decreasing, which makes reduction
/// terminate; whether normal forms are canonical depends on confluence.
class RewriteSystem {
public:
    RewriteSystem(std::int32_t num_gens, std::vector<RewriteRule> rules);

    std::int32_t num_gens() const { return num_gens_; }

    /// All rules including the free-cancellation ones.
    const std::vector<RewriteRule>& rules() const { return rules_; }

    /// Exhaustive leftmost reduction.
    SymStr reduce(SymStr s) const;

    Word normal_form(const Word& w) const;

    /// True when every critical pair of the system is joinable.
    bool is_locally_confluent(std::string* counterexample = nullptr) const;

    /// Knuth-Bendix completion seeded with the free-cancellation rules and
    /// one equation relator = e per relator. Throws ValidationError when a
    /// cap is exhausted before the system is confluent.
    static RewriteSystem complete(std::int32_t num_gens,
                                  const std::vector<Word>& relators,
                                  const KbOptions& opts = {});

private:
    std::int32_t num_gens_;
    std::vector<RewriteRule> rules_;
    std::size_t max_lhs_ = 0;

    static std::vector<RewriteRule> free_rules(std::int32_t num_gens);
};

} // namespace gader

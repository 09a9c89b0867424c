#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gader/rewrite.hpp"
#include "gader/word.hpp"

namespace gader {

enum class StrategyKind { FreeGroup, ConfluentRewriting, FiniteTable };

/// Fully enumerated finite group: element list in shortlex order of normal
/// forms, a total multiplication table and inverses. Validated at
/// construction (totality, two-sided identity at index of e, inverses).
struct FiniteTable {
    std::vector<Word> elements;
    std::vector<std::vector<std::int32_t>> table;
    std::vector<std::int32_t> inverse;
    std::vector<std::int32_t> generator_index;
    std::int32_t identity = 0;

    std::int32_t index_of(const Word& w) const;
    void validate(std::int32_t num_gens) const;

private:
    mutable std::map<Word, std::int32_t, ShortlexLess> index_;
    void build_index() const;
};

/// Enumeration cap shared by every bounded enumeration.
inline constexpr std::size_t kDefaultCap = 100000;

/// Radius value requesting the whole group (FiniteTable only).
inline constexpr int kRadiusFull = -1;

/// A group presentation together with an equality strategy that makes
/// normal_form total. Immutable after construction; safe to share among
/// readers. Operations taking two words assume both belong to this context
/// and reject unknown generator ids.
class GroupCtx {
public:
    static GroupCtx free_group(std::vector<std::string> generator_names);

    /// Runs bounded Knuth-Bendix completion on the relators; throws
    /// ValidationError when the caps are exhausted. With no relators this
    /// is the free group.
    static GroupCtx from_presentation(std::vector<std::string> generator_names,
                                      std::vector<Word> relators,
                                      const KbOptions& opts = {});

    /// Adopts user-supplied rules; they must be shortlex-decreasing and
    /// locally confluent.
    static GroupCtx with_rules(std::vector<std::string> generator_names,
                               std::vector<Word> relators,
                               std::vector<RewriteRule> rules);

    static GroupCtx with_table(std::vector<std::string> generator_names,
                               std::vector<Word> relators, FiniteTable table);

    StrategyKind strategy() const { return kind_; }
    const std::vector<std::string>& generator_names() const { return names_; }
    std::int32_t num_generators() const { return static_cast<std::int32_t>(names_.size()); }
    const std::vector<Word>& relators() const { return relators_; }
    const FiniteTable* table() const { return table_ ? table_.get() : nullptr; }
    const RewriteSystem* rewriting() const { return rewrite_ ? rewrite_.get() : nullptr; }

    Word normal_form(const Word& w) const;
    Word multiply(const Word& u, const Word& v) const;
    Word inverse(const Word& u) const;
    /// normal_form(g a g^-1).
    Word conjugate(const Word& g, const Word& a) const;

    Word generator(std::int32_t i) const;

    Word parse(const std::string& text) const;
    std::string format(const Word& w) const;

private:
    StrategyKind kind_ = StrategyKind::FreeGroup;
    std::vector<std::string> names_;
    std::map<std::string, std::int32_t> ids_;
    std::vector<Word> relators_;
    std::shared_ptr<const RewriteSystem> rewrite_;
    std::shared_ptr<const FiniteTable> table_;

    void check_word(const Word& w) const;
    void init_names(std::vector<std::string> names);
};

/// Parses the presentation text format:
///   gens: x1 x2
///   rel: x1 x2 x1^-1 x2^-1, x2^2
/// Statements are separated by newlines or ';'; '#' starts a comment.
/// With relators present the context is upgraded through Knuth-Bendix.
GroupCtx parse_presentation(const std::string& text, const KbOptions& opts = {});

/// Closes the group under multiplication starting from the generators and
/// returns a FiniteTable context. Throws CapError when `cap` elements are
/// exceeded (the group may be infinite).
GroupCtx materialize_table(const GroupCtx& ctx, std::size_t cap = kDefaultCap);

/// All normal forms of words of length <= radius, shortlex ordered.
/// Closed under inversion and contains e.
struct Ball {
    const GroupCtx* ctx = nullptr;
    int radius = 0;
    std::vector<Word> elements;

    bool contains(const Word& w) const;
    std::size_t size() const { return elements.size(); }
};

Ball ball(const GroupCtx& ctx, int radius, std::size_t cap = kDefaultCap);

/// {g a g^-1 : g in ball(radius)}, shortlex ordered; always contains a.
std::vector<Word> conjugacy_class_ball(const GroupCtx& ctx, const Word& a,
                                       int radius, std::size_t cap = kDefaultCap);

/// {g in ball(radius) : g a = a g}, shortlex ordered; always contains e.
std::vector<Word> centralizer_members(const GroupCtx& ctx, const Word& a,
                                      int radius, std::size_t cap = kDefaultCap);

} // namespace gader

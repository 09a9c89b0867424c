#pragma once

#include "json.hpp"

#include "gader/character.hpp"
#include "gader/constraints.hpp"
#include "gader/groupoid.hpp"
#include "gader/operators.hpp"

namespace gader::jsonio {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Top-level output object: {"schema_version": 1, "kind": ..., ...payload}.
Json envelope(const std::string& kind, Json payload);

Json element_json(const AlgebraElement& u);
AlgebraElement element_from_json(const GroupCtx& ctx, const Json& j);

Json operator_json(const SparseOperator& op);
SparseOperator operator_from_json(const GroupCtx& ctx, const Json& j);

Json morphism_json(const GroupCtx& ctx, const Morphism& m);

Json leibniz_report_json(const GroupCtx& ctx, const LeibnizReport& r);
Json relator_report_json(const GroupCtx& ctx, const RelatorReport& r);

Json character_json(const Character& chr);
Character character_from_json(const GroupCtx& ctx, const Json& j);

Json table_json(const CharacterTable& table);
CharacterTable table_from_json(const GroupCtx& ctx, const Json& j);

Json additivity_report_json(const GroupCtx& ctx, const AdditivityReport& r);
Json finiteness_report_json(const LocalFinitenessReport& r);
Json loop_vanishing_report_json(const GroupCtx& ctx, const LoopVanishingReport& r);
Json ff_report_json(const GroupCtx& ctx, const FfReport& r);

Json graph_json(const ConjGraph& g);

Json system_json(const ConstraintSystem& sys);
Json solve_json(const ConstraintSystem& sys, const SolveResult& r);
Json constraint_report_json(const GroupCtx& ctx, const ConstraintReport& r);

} // namespace gader::jsonio

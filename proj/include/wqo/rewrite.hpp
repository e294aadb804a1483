#pragma once

// Rewriting of wqo expressions: the normalization system for elementary
// expressions and the powerset-elimination rules used by the general engine.

#include "wqo/expr.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wqo {

struct RewriteRule {
  std::string_view name;
  std::optional<Expr> (*apply)(const Expr&);
};

using RuleSet = std::span<const RewriteRule>;

/// Pf(a) -> a, distribution of * over |, M(A|B) -> M(A)*M(B), Pf(A|B) -> Pf(A)*Pf(B).
RuleSet elementary_rules();
/// Pf over ordinals, disjoint unions and lexicographic sums, Pf+ over ordinals and sums,
/// and folding of a lexicographic sum of two ordinals into one ordinal.
RuleSet pf_elimination_rules();

enum class Strategy { leftmost_innermost, leftmost_outermost };

struct RewriteStep {
  std::string rule;
  std::vector<std::size_t> path;  // child indices from the root to the redex
  Expr before;
  Expr after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

struct StepResult {
  std::string rule;
  std::vector<std::size_t> path;
  Expr result;
};

std::optional<StepResult> step(const Expr& e, RuleSet rules,
                               Strategy strategy = Strategy::leftmost_innermost);
/// One elementary rewrite step, if any rule applies.
std::optional<StepResult> step(const Expr& e);
bool is_normal(const Expr& e, RuleSet rules);
bool is_normal(const Expr& e);

struct Normalized {
  Expr expr;
  RewriteTrace trace;
};

/// Rewrites to a fixpoint. Throws InternalError when more than `fuel` steps are taken.
Normalized rewrite_fixpoint(const Expr& e, RuleSet rules, Strategy strategy, std::size_t fuel);

/// Default fuel for an input of the given node count: 4^size, saturating.
std::size_t default_fuel(std::size_t size);

/// Normal form of an elementary expression; throws DomainError on non-elementary input.
Normalized normalize_elementary(const Expr& e, Strategy strategy = Strategy::leftmost_innermost);

Expr eliminate_pf(const Expr& e);
Normalized eliminate_pf_traced(const Expr& e);

/// Flattens | and * chains, sorts their operands and rebuilds them left-nested.
/// Normal forms reached by different strategies coincide after this canonicalization.
Expr ac_canonical(const Expr& e);

/// JSON array [{"rule", "path", "before", "after"}, ...].
std::string trace_to_json(const RewriteTrace& trace);

}  // namespace wqo

#include "wqo/rewrite.hpp"

#include "wqo/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <utility>

namespace wqo {

namespace {

std::optional<Expr> pf_of_ordinal(const Expr& e) {
  if (e.kind() != Kind::pf || e.child(0).kind() != Kind::ord) return std::nullopt;
  // Pf(a) is a chain 1 + a: the empty set below every singleton.
  return Expr::ord(add(Ordinal(1), e.child(0).ordinal()));
}

std::optional<Expr> product_distributes_right(const Expr& e) {
  if (e.kind() != Kind::cart_prod || e.right().kind() != Kind::disj_union) return std::nullopt;
  const Expr& u = e.right();
  return Expr::disj_union(Expr::cart_prod(e.left(), u.left()), Expr::cart_prod(e.left(), u.right()));
}

std::optional<Expr> product_distributes_left(const Expr& e) {
  if (e.kind() != Kind::cart_prod || e.left().kind() != Kind::disj_union) return std::nullopt;
  const Expr& u = e.left();
  return Expr::disj_union(Expr::cart_prod(u.left(), e.right()), Expr::cart_prod(u.right(), e.right()));
}

std::optional<Expr> multisets_of_union(const Expr& e) {
  if (e.kind() != Kind::multisets || e.child(0).kind() != Kind::disj_union) return std::nullopt;
  const Expr& u = e.child(0);
  return Expr::cart_prod(Expr::multisets(u.left()), Expr::multisets(u.right()));
}

std::optional<Expr> pf_of_union(const Expr& e) {
  if (e.kind() != Kind::pf || e.child(0).kind() != Kind::disj_union) return std::nullopt;
  const Expr& u = e.child(0);
  return Expr::cart_prod(Expr::pf(u.left()), Expr::pf(u.right()));
}

std::optional<Expr> pf_of_lex_sum(const Expr& e) {
  if (e.kind() != Kind::pf || e.child(0).kind() != Kind::lex_sum) return std::nullopt;
  const Expr& s = e.child(0);
  return Expr::lex_sum(Expr::pf(s.left()), Expr::pf_plus(s.right()));
}

std::optional<Expr> pf_plus_of_ordinal(const Expr& e) {
  if (e.kind() != Kind::pf_plus || e.child(0).kind() != Kind::ord) return std::nullopt;
  return e.child(0);
}

std::optional<Expr> pf_plus_of_lex_sum(const Expr& e) {
  if (e.kind() != Kind::pf_plus || e.child(0).kind() != Kind::lex_sum) return std::nullopt;
  const Expr& s = e.child(0);
  return Expr::lex_sum(Expr::pf_plus(s.left()), Expr::pf_plus(s.right()));
}

std::optional<Expr> lex_sum_of_ordinals(const Expr& e) {
  if (e.kind() != Kind::lex_sum || e.left().kind() != Kind::ord || e.right().kind() != Kind::ord) return std::nullopt;
  return Expr::ord(add(e.left().ordinal(), e.right().ordinal()));
}

constexpr std::array kElementaryRules{
    RewriteRule{"Pf-of-ordinal", pf_of_ordinal},
    RewriteRule{"product-distributes-right", product_distributes_right},
    RewriteRule{"product-distributes-left", product_distributes_left},
    RewriteRule{"M-of-union", multisets_of_union},
    RewriteRule{"Pf-of-union", pf_of_union},
};

constexpr std::array kPfEliminationRules{
    RewriteRule{"Pf-of-ordinal", pf_of_ordinal},
    RewriteRule{"Pf-of-union", pf_of_union},
    RewriteRule{"Pf-of-lex-sum", pf_of_lex_sum},
    RewriteRule{"Pf+-of-ordinal", pf_plus_of_ordinal},
    RewriteRule{"Pf+-of-lex-sum", pf_plus_of_lex_sum},
    RewriteRule{"lex-sum-of-ordinals", lex_sum_of_ordinals},
};

std::optional<StepResult> apply_here(const Expr& e, RuleSet rules) {
  for (const auto& rule : rules) {
    if (auto r = rule.apply(e)) return StepResult{std::string(rule.name), {}, std::move(*r)};
  }
  return std::nullopt;
}

std::optional<StepResult> apply_below(const Expr& e, RuleSet rules, Strategy strategy) {
  const auto kids = e.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    auto r = step(kids[i], rules, strategy);
    if (!r) continue;
    std::vector<Expr> rebuilt(kids.begin(), kids.end());
    rebuilt[i] = std::move(r->result);
    r->path.insert(r->path.begin(), i);
    r->result = e.with_children(std::move(rebuilt));
    return r;
  }
  return std::nullopt;
}

void flatten(const Expr& e, Kind k, std::vector<Expr>& out) {
  if (e.kind() == k) {
    flatten(e.left(), k, out);
    flatten(e.right(), k, out);
  } else {
    out.push_back(ac_canonical(e));
  }
}

}  // namespace

RuleSet elementary_rules() { return kElementaryRules; }

RuleSet pf_elimination_rules() { return kPfEliminationRules; }

std::optional<StepResult> step(const Expr& e, RuleSet rules, Strategy strategy) {
  if (strategy == Strategy::leftmost_outermost) {
    if (auto r = apply_here(e, rules)) return r;
    return apply_below(e, rules, strategy);
  }
  if (auto r = apply_below(e, rules, strategy)) return r;
  return apply_here(e, rules);
}

std::optional<StepResult> step(const Expr& e) { return step(e, elementary_rules()); }

bool is_normal(const Expr& e, RuleSet rules) {
  if (apply_here(e, rules)) return false;
  return std::all_of(e.children().begin(), e.children().end(),
                     [&](const Expr& c) { return is_normal(c, rules); });
}

bool is_normal(const Expr& e) { return is_normal(e, elementary_rules()); }

std::size_t default_fuel(std::size_t size) {
  constexpr std::size_t cap = std::size_t{1} << 40;
  std::size_t fuel = 1;
  for (std::size_t i = 0; i < size && fuel < cap; ++i) fuel *= 4;
  return std::min(fuel, cap);
}

Normalized rewrite_fixpoint(const Expr& e, RuleSet rules, Strategy strategy, std::size_t fuel) {
  Normalized out{e, {}};
  while (auto r = step(out.expr, rules, strategy)) {
    if (out.trace.steps.size() >= fuel) throw InternalError("rewriting did not terminate within its fuel budget");
    out.trace.steps.push_back(RewriteStep{std::move(r->rule), std::move(r->path), out.expr, r->result});
    out.expr = std::move(r->result);
  }
  return out;
}

Normalized normalize_elementary(const Expr& e, Strategy strategy) {
  if (!is_elementary(e)) throw DomainError("normalize_elementary: " + to_string(e) + " is not elementary");
  return rewrite_fixpoint(e, elementary_rules(), strategy, default_fuel(e.size()));
}

Normalized eliminate_pf_traced(const Expr& e) {
  return rewrite_fixpoint(e, pf_elimination_rules(), Strategy::leftmost_innermost, default_fuel(e.size()));
}

Expr eliminate_pf(const Expr& e) { return eliminate_pf_traced(e).expr; }

Expr ac_canonical(const Expr& e) {
  if (e.kind() == Kind::disj_union || e.kind() == Kind::cart_prod) {
    std::vector<Expr> operands;
    flatten(e, e.kind(), operands);
    std::sort(operands.begin(), operands.end());
    Expr acc = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i) {
      acc = e.kind() == Kind::disj_union ? Expr::disj_union(acc, operands[i]) : Expr::cart_prod(acc, operands[i]);
    }
    return acc;
  }
  std::vector<Expr> kids;
  for (const auto& c : e.children()) kids.push_back(ac_canonical(c));
  return kids.empty() ? e : e.with_children(std::move(kids));
}

std::string trace_to_json(const RewriteTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"rule", s.rule}, {"path", s.path}, {"before", to_string(s.before)}, {"after", to_string(s.after)}});
  }
  return steps.dump();
}

}  // namespace wqo

#include "support/random_expr.hpp"
#include "wqo/errors.hpp"
#include "wqo/invariants.hpp"
#include "wqo/rewrite.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

namespace wqo {
namespace {

Ordinal O(std::string_view s) { return parse_ordinal(s); }

InvariantReport inv(std::string_view s) { return invariants(parse_expr(s)); }

void expect_exact(const InvariantResult& r, std::string_view v) {
  ASSERT_TRUE(r.is_exact()) << to_string(r);
  EXPECT_EQ(to_string(r.value()), v);
}

void expect_triple(std::string_view e, std::string_view o, std::string_view h, std::string_view w) {
  SCOPED_TRACE(std::string(e));
  const auto r = inv(e);
  expect_exact(r.mot, o);
  expect_exact(r.height, h);
  expect_exact(r.width, w);
}

TEST(Invariants, NonFunctionalityExample) {
  expect_triple("(w+w)|(w+w)", "w*4", "w*2", "2");
  expect_triple("(w|w)++(w|w)", "w*4", "w*2", "2");
  expect_triple("Pf((w+w)|(w+w))", "w^2*4", "w*3", "w*3");
  expect_triple("Pf((w|w)++(w|w))", "w^2*2", "w*2", "w");
}

TEST(Invariants, ElementaryAndTableRows) {
  // 2^(w^(w^(w^w))) = w^(w^(w^(w^w))).
  expect_triple("Pf(o(w^w)^<w)", "w^(w^(w^(w^w)))", "w^w", "w^(w^(w^(w^w)))");
  expect_triple("M(o(w))", "w^w", "w", "w^w");
  expect_triple("G(3)", "3", "1", "3");
  expect_triple("5", "5", "5", "1");
  expect_triple("G(2)|3", "5", "3", "3");
  expect_triple("3*4", "12", "6", "3");
  expect_triple("2*3*4", "24", "7", "6");
  expect_triple("w*o(w^2+1)", "w^3+w", "w^2+w", "w^2+1");
  expect_triple("o(w*2)*G(3)", "w*6", "w*2", "3");
  expect_triple("3.G(2)", "6", "3", "2");
  expect_triple("w.w", "w^2", "w^2", "1");
  expect_triple("G(2)^<w", "w^w", "w", "w^w");
}

TEST(Invariants, HypothesisFailuresArePerComponent) {
  auto r = inv("w.3");
  ASSERT_TRUE(r.mot.is_unsupported());
  EXPECT_EQ(r.mot.reason(), "hypothesis-not-met");
  EXPECT_TRUE(r.any_hypothesis_failure());
  expect_exact(r.height, "w*3");
  r = inv("M(o(w+1))");
  EXPECT_EQ(r.width.reason(), "hypothesis-not-met");
  expect_exact(r.mot, "w^(w+1)");
  r = inv("M(G(2))");
  EXPECT_EQ(r.width.reason(), "hypothesis-not-met");
  expect_exact(r.mot, "w^2");
}

TEST(Invariants, ProductWidthOutsideKnownCases) {
  auto r = inv("(G(2)++3)*(1++G(2))");
  ASSERT_TRUE(r.width.is_unsupported());
  EXPECT_EQ(r.width.reason(), "width-of-product-non-functional");
  EXPECT_FALSE(r.any_hypothesis_failure());
  expect_exact(r.mot, "15");
  expect_exact(r.height, "5");
  // w(B) = w is additively indecomposable: w(A*B) >= w * o(A).
  expect_exact(inv("w^<w*(1++G(2))").width, "w^(w^w)*3");
  r = inv("M(w)*o(w^(w^2)+1)");
  ASSERT_EQ(r.width.kind(), InvariantResult::Kind::interval) << to_string(r.width);
  EXPECT_EQ(to_string(r.width.lower()), "w^(w^2)+w^w");
  EXPECT_EQ(to_string(r.width.upper()), "w^(w^2+w)+w^w");
}

TEST(Invariants, OmegaElementaryHeight) {
  const auto r = inv("Pf(M(w))");
  expect_exact(r.height, "w");
  expect_exact(r.mot, "w^(w^w)");
  expect_exact(r.width, "w^(w^w)");
  expect_exact(inv("Pf(w^<w)|w").height, "w");
}

TEST(Invariants, NonemptyPowerset) {
  expect_triple("Pf+(w|w)", "w^2", "w", "w");
  expect_triple("Pf+(G(3))", "7", "3", "3");
  expect_triple("Pf+(0)", "0", "0", "0");
}

TEST(Invariants, JsonShape) {
  const auto j = nlohmann::json::parse(report_to_json(inv("Pf(o(w^w)^<w)")));
  EXPECT_EQ(j["mot"]["kind"], "exact");
  EXPECT_EQ(j["height"]["value"], "w^w");
  EXPECT_EQ(j["weak_mot"], "w^(w^w)");
  EXPECT_TRUE(j["notes"].is_array());
  const auto b = nlohmann::json::parse(report_to_json(pf_bounds(parse_expr("o(w^2)"))));
  EXPECT_EQ(b["height"]["kind"], "interval");
  EXPECT_FALSE(b["height"].contains("upper_modifier"));
  const auto s = nlohmann::json::parse(report_to_json(pf_bounds(parse_expr("o(w+1)"))));
  EXPECT_EQ(s["height"]["upper_modifier"], "finite-multiple");
  const auto u = nlohmann::json::parse(report_to_json(inv("(G(2)++3)*(1++G(2))")));
  EXPECT_EQ(u["width"]["kind"], "unsupported");
  EXPECT_EQ(u["width"]["reason"], "width-of-product-non-functional");
}

TEST(WeakMot, Fixtures) {
  EXPECT_EQ(weak_mot(parse_expr("o(w^w)")), O("w^w"));
  EXPECT_EQ(weak_mot(parse_expr("o(w^w)^<w")), O("w^w"));
  EXPECT_EQ(to_string(weak_mot(parse_expr("Pf(o(w^(w^2))^<w)"))), "w^(w^(w^2))");
  EXPECT_THROW(weak_mot(parse_expr("w")), DomainError);
}

TEST(WeakMot, IndecomposableOnRandomElementary) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const Expr e = testing::random_elementary(rng, 14);
    const Ordinal o = weak_mot(e);
    ASSERT_TRUE(o.is_multiplicatively_indecomposable()) << to_string(e);
    // h(Pf(E)) = weak o(E).
    ASSERT_EQ(invariants(Expr::pf(e)).height, InvariantResult::exact(o)) << to_string(e);
  }
}

TEST(PfBounds, Fixtures) {
  auto r = pf_bounds(parse_expr("o(w^2)"));
  ASSERT_EQ(r.height.kind(), InvariantResult::Kind::interval);
  EXPECT_EQ(to_string(r.height.lower()), "w^2");
  EXPECT_EQ(to_string(r.height.upper()), "w^w");
  EXPECT_FALSE(r.height.finite_multiple());

  r = pf_bounds(parse_expr("G(4)"));
  EXPECT_EQ(r.width.lower(), Ordinal(6));
  EXPECT_TRUE(r.width.contains(6));
  EXPECT_EQ(to_string(r.mot), "[6, 16]");
  EXPECT_TRUE(r.height.finite_multiple());

  r = pf_bounds(parse_expr("w"));
  expect_exact(r.mot, "w");

  r = pf_bounds(parse_expr("o(w+1)"));
  EXPECT_TRUE(r.height.finite_multiple());
  EXPECT_TRUE(r.height.contains(O("w*5")));
  EXPECT_FALSE(r.height.contains(O("w^2")));
}

TEST(PfBounds, ContainExactElementaryValues) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Expr e = testing::random_elementary(rng, 10);
    const auto exact = invariants(Expr::pf(e));
    const auto bounds = pf_bounds(e);
    ASSERT_TRUE(exact.mot.is_exact());
    ASSERT_TRUE(bounds.mot.contains(exact.mot.value())) << to_string(e);
    ASSERT_TRUE(bounds.height.contains(exact.height.value())) << to_string(e);
    ASSERT_TRUE(bounds.width.contains(exact.width.value())) << to_string(e);
  }
}

TEST(Families, Phi) {
  auto r = phi_invariants(O("w^2+w"));
  expect_exact(r.mot, "w^2+w");
  expect_exact(r.width, "w^2+w");
  expect_exact(r.height, "w^2");
  r = phi_invariants(3);
  expect_exact(r.mot, "3");
  expect_exact(r.height, "1");
  EXPECT_THROW(phi_invariants(0), DomainError);

  r = pf_phi_invariants(O("w"));
  expect_exact(r.mot, "w");
  expect_exact(r.width, "w");
  r = pf_phi_invariants(O("w^2+w"));
  expect_exact(r.mot, "w^(w+1)");
  EXPECT_FALSE(r.height.is_exact());
  EXPECT_TRUE(r.height.contains(O("w^2")));
  r = pf_phi_invariants(4);
  expect_exact(r.mot, "16");
  expect_exact(r.height, "5");
  expect_exact(r.width, "6");
  r = inv("Pf(Phi(w^2+w))");
  expect_exact(r.mot, "w^(w+1)");
  expect_exact(r.width, "w^(w+1)");
}

TEST(Families, Sim) {
  auto s = sim_invariants(O("w^w"));
  expect_exact(s.member.height, "w^w");
  expect_exact(s.powerset.height, "w^(w^w)");
  expect_exact(inv("Pf(Sim(w^w))").height, "w^(w^w)");
  s = sim_invariants(O("w"));
  expect_exact(s.member.height, "w");

  s = sim_invariants(O("w^w"), 3);
  expect_exact(s.member.height, "w^w+1");
  ASSERT_EQ(s.powerset.height.kind(), InvariantResult::Kind::lower);
  EXPECT_EQ(to_string(s.powerset.height.lower()), "w^(w^w)*3");

  EXPECT_THROW(sim_invariants(O("w^2"), 3), HypothesisError);
  EXPECT_TRUE(inv("Sim(w^2)").any_hypothesis_failure());
}

TEST(Invariants, ConsistencyOnRandomExpressions) {
  std::mt19937_64 rng(1234);
  int exact = 0;
  for (int i = 0; i < 3000; ++i) {
    const Expr e = testing::random_any_expr(rng, 4);
    InvariantReport r;
    ASSERT_NO_THROW(r = invariants(e)) << to_string(e);
    if (r.fully_exact()) ++exact;
    for (const auto* x : {&r.mot, &r.height, &r.width}) {
      if (x->kind() == InvariantResult::Kind::interval) ASSERT_TRUE(x->finite_multiple() || x->lower() <= x->upper());
    }
  }
  EXPECT_GT(exact, 300);
}

}  // namespace
}  // namespace wqo

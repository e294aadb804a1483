#include "support/random_expr.hpp"
#include "wqo/errors.hpp"
#include "wqo/expr.hpp"

#include <gtest/gtest.h>

namespace wqo {
namespace {

Ordinal O(std::string_view s) { return parse_ordinal(s); }

TEST(ExprParse, Fixtures) {
  const Expr w = Expr::ord(Ordinal::omega());
  EXPECT_EQ(parse_expr("(w+w)|(w+w)"), Expr::disj_union(Expr::lex_sum(w, w), Expr::lex_sum(w, w)));
  EXPECT_EQ(parse_expr("Pf(o(w^w)^<w)"), Expr::pf(Expr::words(Expr::ord(O("w^w")))));
  EXPECT_EQ(parse_expr("G(3)*G(2)"), Expr::cart_prod(Expr::gamma(3), Expr::gamma(2)));
  EXPECT_EQ(parse_expr("Pf((w|w)++(w|w))"),
            Expr::pf(Expr::lex_sum(Expr::disj_union(w, w), Expr::disj_union(w, w))));
  EXPECT_EQ(parse_expr("M(o(w^w)|o(w^w))"), Expr::multisets(Expr::disj_union(Expr::ord(O("w^w")), Expr::ord(O("w^w")))));
  EXPECT_EQ(parse_expr("Mn(G(2),3)"), Expr::multisets_n(Expr::gamma(2), 3));
  EXPECT_EQ(parse_expr("SimExt(w^w, 3)"), Expr::sim_ext(O("w^w"), 3));
  EXPECT_EQ(parse_expr("Phi(w^2+w)"), Expr::phi(O("w^2+w")));
  EXPECT_EQ(parse_expr("Pf+(3)"), Expr::pf_plus(Expr::ord(3)));
  EXPECT_EQ(parse_expr("w^w"), Expr::ord(O("w^w")));
}

TEST(ExprParse, PrecedenceAndAssociativity) {
  const Expr a = Expr::gamma(1), b = Expr::gamma(2), c = Expr::gamma(3);
  EXPECT_EQ(parse_expr("G(1)++G(2)|G(3)"), Expr::lex_sum(a, Expr::disj_union(b, c)));
  EXPECT_EQ(parse_expr("G(1)|G(2)*G(3)"), Expr::disj_union(a, Expr::cart_prod(b, c)));
  EXPECT_EQ(parse_expr("G(1)*G(2).G(3)"), Expr::lex_prod(Expr::cart_prod(a, b), c));
  EXPECT_EQ(parse_expr("G(1)|G(2)|G(3)"), Expr::disj_union(Expr::disj_union(a, b), c));
  EXPECT_EQ(parse_expr("G(1)*G(2)^<w"), Expr::cart_prod(a, Expr::words(b)));
}

TEST(ExprParse, Errors) {
  for (const char* bad : {"", "G(0)", "G(", "Pf(w", "w |", "Q(3)", "(w))", "Mn(w)", "w^"}) {
    EXPECT_THROW(parse_expr(bad), Error) << bad;
  }
  try {
    parse_expr("G(2) | ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(ExprPrint, Fixtures) {
  EXPECT_EQ(to_string(parse_expr("(w+w)|(w+w)")), "(o(w)++o(w))|(o(w)++o(w))");
  EXPECT_EQ(to_string(parse_expr("Pf(o(w^w)^<w)")), "Pf(o(w^w)^<w)");
  EXPECT_EQ(to_string(parse_expr("G(3)*G(2)")), "G(3)*G(2)");
}

TEST(ExprPrint, RoundTripRandomTrees) {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 2000; ++i) {
    const Expr e = testing::random_any_expr(rng, 6);
    const std::string text = to_string(e);
    ASSERT_EQ(parse_expr(text), e) << text;
  }
}

TEST(ExprClassify, Elementary) {
  EXPECT_TRUE(is_elementary(parse_expr("Pf(o(w^w)^<w)")));
  EXPECT_FALSE(is_elementary(parse_expr("w")));
  EXPECT_TRUE(is_elementary(parse_expr("o(w^w)|o(w^(w^2))")));
  // w^(w*2) is additively but not multiplicatively indecomposable.
  EXPECT_FALSE(is_elementary(parse_expr("o(w^w)|o(w^(w*2))")));
  EXPECT_FALSE(is_elementary(parse_expr("o(w^w)++o(w^w)")));
  EXPECT_FALSE(is_elementary(parse_expr("o(w^(w^2+1))")));
  EXPECT_FALSE(is_elementary(parse_expr("Pf(Sim(w^w))")));
  EXPECT_FALSE(is_elementary(parse_expr("G(2)*o(w^w)")));
}

TEST(ExprClassify, ElementaryIsHereditary) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const Expr e = testing::random_elementary(rng, 12);
    ASSERT_TRUE(is_elementary(e)) << to_string(e);
    for (const auto& c : e.children()) ASSERT_TRUE(is_elementary(c));
  }
}

TEST(ExprClassify, OmegaElementary) {
  EXPECT_TRUE(is_omega_elementary(parse_expr("w")));
  EXPECT_TRUE(is_omega_elementary(parse_expr("Pf(M(w))")));
  EXPECT_TRUE(is_omega_elementary(parse_expr("(w|w)*w^<w")));
  EXPECT_FALSE(is_omega_elementary(parse_expr("o(w^2)")));
  EXPECT_FALSE(is_omega_elementary(parse_expr("w++w")));
}

TEST(ExprClassify, Finite) {
  EXPECT_TRUE(is_finite_expr(parse_expr("G(3)")));
  EXPECT_FALSE(is_finite_expr(parse_expr("w")));
  EXPECT_TRUE(is_finite_expr(parse_expr("Pf(G(4))")));
  EXPECT_TRUE(is_finite_expr(parse_expr("Mn(G(2)|3,2).Pf+(2)")));
  EXPECT_FALSE(is_finite_expr(parse_expr("G(2)^<w")));
  EXPECT_TRUE(is_finite_expr(parse_expr("G(2)^<w"), true));
  EXPECT_TRUE(is_finite_expr(parse_expr("Phi(3)")));
  EXPECT_FALSE(is_finite_expr(parse_expr("Phi(w)")));
}

TEST(ExprNode, Accessors) {
  const Expr e = parse_expr("SimExt(w^w,3)");
  EXPECT_EQ(e.kind(), Kind::sim_ext);
  EXPECT_EQ(e.count(), 3u);
  EXPECT_EQ(e.ordinal(), O("w^w"));
  EXPECT_EQ(parse_expr("Pf(G(2)|3)").size(), 4u);
  EXPECT_THROW(Expr::gamma(0), DomainError);
}

}  // namespace
}  // namespace wqo

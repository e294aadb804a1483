#include "support/small_ordinal.hpp"
#include "wqo/errors.hpp"
#include "wqo/ordinal.hpp"

#include <gtest/gtest.h>

#include <random>

namespace wqo {
namespace {

using testing::Small;

Ordinal O(std::string_view s) { return parse_ordinal(s); }

std::string S(const Ordinal& a) { return to_string(a); }

// Random CNF ordinal with nested exponents; depth bounds the tower height.
Ordinal random_ordinal(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> terms(0, 3);
  std::uniform_int_distribution<std::uint64_t> coeff(1, 4);
  std::uniform_int_distribution<std::uint64_t> small(0, 3);
  const int n = terms(rng);
  std::vector<Ordinal> exps;
  for (int i = 0; i < n; ++i) exps.push_back(depth == 0 ? Ordinal(small(rng)) : random_ordinal(rng, depth - 1));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Ordinal::Term> ts;
  for (auto& e : exps) ts.push_back({e, Natural(coeff(rng))});
  return Ordinal::from_terms(std::move(ts));
}

// Some ordinal strictly below a nonzero a.
Ordinal predecessor_or_below(const Ordinal& a) {
  if (a.is_successor()) return predecessor(a);
  auto ts = a.terms();
  const Ordinal e = ts.back().exponent;
  ts.back().coefficient -= 1;
  if (ts.back().coefficient == 0) ts.pop_back();
  return add(add(Ordinal::from_terms(ts), e.is_successor() ? omega_pow(predecessor(e)) : Ordinal(0)), 17);
}

TEST(OrdinalText, RoundTrip) {
  for (const char* s : {"0", "5", "w", "w^w", "w^(w^2)*3+w*2+5", "w^(w+1)+w^3*9+w", "w^(w^w)"}) {
    EXPECT_EQ(S(O(s)), s);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Ordinal a = random_ordinal(rng, 2);
    EXPECT_EQ(O(S(a)), a);
  }
}

TEST(OrdinalText, NormalizesNonCanonicalInput) {
  EXPECT_EQ(S(O("1+w")), "w");
  EXPECT_EQ(S(O("w+w")), "w*2");
  EXPECT_EQ(S(O("w^1")), "w");
  EXPECT_EQ(S(O("w^0*4")), "4");
}

TEST(OrdinalText, RejectsMalformed) {
  EXPECT_THROW(O(""), ParseError);
  EXPECT_THROW(O("w^"), ParseError);
  EXPECT_THROW(O("w*0"), ParseError);
  EXPECT_THROW(O("w+"), ParseError);
  EXPECT_THROW(O("(w"), ParseError);
  try {
    O("w^)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(OrdinalCompare, Fixtures) {
  EXPECT_EQ(O("w") <=> O("w"), std::strong_ordering::equal);
  EXPECT_LT(O("w*2+1"), O("w^2"));
  EXPECT_GT(O("w^w"), O("w^3*9+w"));
}

TEST(OrdinalClassify, Flags) {
  auto z = classify(0);
  EXPECT_TRUE(z.is_zero && !z.is_successor && !z.is_limit);
  auto one = classify(1);
  EXPECT_TRUE(one.is_successor && one.is_additively_indecomposable && !one.is_multiplicatively_indecomposable);
  EXPECT_FALSE(classify(2).is_multiplicatively_indecomposable);
  EXPECT_TRUE(classify(O("w")).is_multiplicatively_indecomposable);
  EXPECT_TRUE(classify(O("w^w")).is_multiplicatively_indecomposable);
  EXPECT_TRUE(classify(O("w^(w^2)")).is_multiplicatively_indecomposable);
  EXPECT_FALSE(classify(O("w^2")).is_multiplicatively_indecomposable);
  EXPECT_TRUE(classify(O("w^2")).is_additively_indecomposable);
  EXPECT_FALSE(classify(O("w*2")).is_additively_indecomposable);
  EXPECT_TRUE(classify(O("w^2+w")).is_limit);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto c = classify(random_ordinal(rng, 2));
    EXPECT_EQ(int(c.is_zero) + int(c.is_successor) + int(c.is_limit), 1);
  }
}

TEST(OrdinalArithmetic, Fixtures) {
  EXPECT_EQ(add(1, O("w")), O("w"));
  EXPECT_EQ(S(add(O("w"), 1)), "w+1");
  EXPECT_EQ(S(add(O("w^2+w"), O("w^2"))), "w^2*2");
  EXPECT_EQ(left_subtract(1, O("w")), O("w"));
  EXPECT_EQ(left_subtract(O("w"), O("w*2")), O("w"));
  EXPECT_EQ(left_subtract(3, 7), Ordinal(4));
  EXPECT_THROW(left_subtract(O("w"), 5), DomainError);
  EXPECT_EQ(S(mul(O("w+1"), O("w"))), "w^2");
  EXPECT_EQ(S(mul(O("w^w"), O("w^w"))), "w^(w*2)");
  EXPECT_EQ(S(nat_sum(O("w*2"), O("w*2"))), "w*4");
  EXPECT_EQ(S(nat_sum(O("w^2+1"), O("w"))), "w^2+w+1");
  EXPECT_EQ(S(nat_prod(O("w*2"), O("w*2"))), "w^2*4");
  EXPECT_EQ(S(nat_prod(O("w+1"), O("w+1"))), "w^2+w*2+1");
  EXPECT_EQ(S(omega_pow(0)), "1");
  EXPECT_EQ(S(omega_pow(1)), "w");
  EXPECT_EQ(S(omega_pow(O("w^2"))), "w^(w^2)");
}

TEST(OrdinalArithmetic, AgreesWithCoefficientVectorsBelowOmegaPowOmega) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 3000; ++i) {
    const Small a = testing::random_small(rng), b = testing::random_small(rng);
    const Ordinal x = testing::to_ordinal(a), y = testing::to_ordinal(b);
    ASSERT_EQ(x < y, testing::cmp(a, b) < 0);
    ASSERT_EQ(add(x, y), testing::to_ordinal(testing::ref_add(a, b))) << S(x) << " + " << S(y);
    ASSERT_EQ(nat_sum(x, y), testing::to_ordinal(testing::ref_nat_sum(a, b)));
    ASSERT_EQ(nat_prod(x, y), testing::to_ordinal(testing::ref_nat_prod(a, b)));
    ASSERT_EQ(hat_nat_sum(x, y), testing::to_ordinal(testing::ref_hat_nat_sum(a, b)))
        << S(x) << " hat+ " << S(y);
    if (a.degree() + b.degree() <= 6) {
      ASSERT_EQ(mul(x, y), testing::to_ordinal(testing::ref_mul(a, b))) << S(x) << " * " << S(y);
    }
    if (testing::cmp(a, b) <= 0) ASSERT_EQ(add(x, left_subtract(x, y)), y);
  }
}

TEST(OrdinalArithmetic, AlgebraicLaws) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 400; ++i) {
    const Ordinal a = random_ordinal(rng, 2), b = random_ordinal(rng, 2), c = random_ordinal(rng, 2);
    ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    ASSERT_EQ(nat_sum(a, b), nat_sum(b, a));
    ASSERT_EQ(nat_sum(nat_sum(a, b), c), nat_sum(a, nat_sum(b, c)));
    ASSERT_EQ(nat_prod(a, b), nat_prod(b, a));
    ASSERT_EQ(nat_prod(nat_prod(a, b), c), nat_prod(a, nat_prod(b, c)));
    ASSERT_EQ(nat_prod(a, nat_sum(b, c)), nat_sum(nat_prod(a, b), nat_prod(a, c)));
    ASSERT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
    ASSERT_GE(add(a, b), std::max(a, b));
    ASSERT_GE(nat_sum(a, b), add(a, b));
    ASSERT_GE(add(a, b), a);
    ASSERT_EQ(mul(a, 1), a);
    ASSERT_EQ(nat_prod(a, 1), a);
    if (b < c) {
      ASSERT_LT(add(a, b), add(a, c));
      ASSERT_LT(nat_sum(b, a), nat_sum(c, a));
      if (!a.is_zero()) {
        ASSERT_LT(mul(a, b), mul(a, c));
        ASSERT_LT(nat_prod(b, a), nat_prod(c, a));
      }
    }
  }
}

TEST(OrdinalExponentiation, Fixtures) {
  EXPECT_EQ(S(two_pow(O("w"))), "w");
  EXPECT_EQ(S(two_pow(O("w^2"))), "w^w");
  EXPECT_EQ(S(two_pow(O("w*2+3"))), "w^2*8");
  auto d = decompose_omega(O("w^2*3+5"));
  EXPECT_EQ(S(d.quotient), "w*3");
  EXPECT_EQ(d.remainder, 5);
  d = decompose_omega(7);
  EXPECT_TRUE(d.quotient.is_zero());
  EXPECT_EQ(d.remainder, 7);
  d = decompose_omega(O("w^w"));
  EXPECT_EQ(S(d.quotient), "w^w");
  EXPECT_EQ(d.remainder, 0);
}

TEST(OrdinalExponentiation, Laws) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const Ordinal a = random_ordinal(rng, 2);
    const auto d = decompose_omega(a);
    ASSERT_EQ(add(mul(Ordinal::omega(), d.quotient), Ordinal(d.remainder)), a);
    ASSERT_EQ(two_pow(mul(Ordinal::omega(), a)), omega_pow(a));
    const std::uint64_t n = rng() % 6;
    ASSERT_EQ(two_pow(add(a, n)), mul(two_pow(a), two_pow(n)));
  }
  EXPECT_THROW(two_pow(O("w+2000000")), DomainError);
}

TEST(HatNatSum, Fixtures) {
  EXPECT_EQ(S(hat_nat_sum(O("w*2"), O("w*2"))), "w*3");
  EXPECT_TRUE(hat_nat_sum(O("w^3"), 0).is_zero());
  EXPECT_EQ(S(hat_nat_sum(O("w^w+1"), O("w^w+1"))), "w^w*2+1");
  EXPECT_EQ(hat_nat_sum(3, 4), Ordinal(6));
  for (std::uint64_t n = 1; n <= 8; ++n)
    for (std::uint64_t m = 1; m <= 8; ++m) EXPECT_EQ(hat_nat_sum(n, m), Ordinal(n + m - 1));
}

TEST(HatNatSum, PlainVariantDropsTheSuccessorStep) {
  EXPECT_EQ(hat_nat_sum(3, 4, HatSumVariant::plain_sup), Ordinal(5));
  EXPECT_EQ(hat_nat_sum(O("w*2"), O("w*2"), HatSumVariant::plain_sup), O("w*3"));
}

TEST(HatNatSum, BoundsOnNestedOrdinals) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Ordinal a = random_ordinal(rng, 2), b = random_ordinal(rng, 2);
    const Ordinal h = hat_nat_sum(a, b);
    ASSERT_LE(h, nat_sum(a, b));
    ASSERT_EQ(h, hat_nat_sum(b, a));
    if (!a.is_zero() && !b.is_zero()) {
      // Sampled elements below a and b: drop the last term or lower its coefficient.
      for (const Ordinal& x : {predecessor_or_below(a), Ordinal(0)})
        for (const Ordinal& y : {predecessor_or_below(b), Ordinal(0)}) ASSERT_LE(add(nat_sum(x, y), 1), h);
    }
  }
}

TEST(OrdinalNotation, Fixtures) {
  EXPECT_EQ(pm(5), Ordinal(4));
  EXPECT_EQ(pm(O("w")), O("w"));
  EXPECT_EQ(pm(O("w^w")), O("w^w"));
  EXPECT_THROW(pm(0), DomainError);
  EXPECT_EQ(hat(O("w^2+w")), O("w^2+w"));
  EXPECT_TRUE(oprim(0).is_zero());
  EXPECT_EQ(hat(1), Ordinal(1));
  EXPECT_EQ(hstar(O("w")), O("w"));
  EXPECT_EQ(S(hstar(O("w+1"))), "w^2");
  EXPECT_EQ(hstar(3), O("w"));
}

TEST(Odot, Fixtures) {
  EXPECT_EQ(S(odot(O("w"), O("w"))), "w^2");
  EXPECT_EQ(S(odot(O("w"), O("w+1"))), "w^2+w");
  EXPECT_TRUE(odot(O("w^3"), 0).is_zero());
  EXPECT_EQ(S(odot(O("w*2+1"), 3)), "w*6+3");
  try {
    odot(O("w*2"), O("w"));
    FAIL();
  } catch (const UnsupportedError& e) {
    EXPECT_EQ(e.code(), "unsupported-odot");
  }
}

TEST(Odot, BetweenProductAndNaturalProduct) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Ordinal a = omega_pow(random_ordinal(rng, 1));
    const Ordinal b = random_ordinal(rng, 2);
    const Ordinal r = odot(a, b);
    ASSERT_LE(mul(a, b), r);
    ASSERT_LE(r, nat_prod(a, b));
    if (!b.is_zero() && b.is_successor()) ASSERT_EQ(r, nat_sum(odot(a, predecessor(b)), a));
  }
}

TEST(SumOmegaPowers, Fixtures) {
  EXPECT_EQ(S(sum_omega_powers(O("w+1"))), "w^w*2");
  EXPECT_EQ(S(sum_omega_powers(3)), "w^2");
  EXPECT_EQ(S(sum_omega_powers(O("w"))), "w^w");
  EXPECT_THROW(sum_omega_powers(0), DomainError);
  // Finite partial sums telescope: 1 + w + ... + w^(n-1) = w^(n-1).
  for (std::uint64_t n = 1; n <= 6; ++n) {
    Ordinal acc;
    for (std::uint64_t k = 0; k < n; ++k) acc = add(acc, omega_pow(k));
    EXPECT_EQ(sum_omega_powers(n), acc);
  }
}

}  // namespace
}  // namespace wqo

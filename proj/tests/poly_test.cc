#include "canonrep/poly.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace canonrep {
namespace {

using testing::Gen;

Poly random_poly(Gen& gen, const QuadraticField& f, int degree) {
  std::vector<Fq> c;
  for (int k = 0; k <= degree; ++k) c.push_back(gen.element(f));
  return Poly(&f, c);
}

TEST(PolyTest, ZeroIsEmpty) {
  QuadraticField f(7);
  const Poly zero(&f, {f(0), f(0)});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_TRUE(zero.coeffs().empty());
}

TEST(PolyTest, DivmodReconstructs) {
  Gen gen;
  QuadraticField f(11);
  for (int s = 0; s < 50; ++s) {
    const Poly a = random_poly(gen, f, gen.integer(0, 8));
    Poly b = random_poly(gen, f, gen.integer(0, 4));
    if (b.is_zero()) continue;
    const auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(PolyTest, GcdOfCoprimeLinearFactors) {
  QuadraticField f(7);
  const Poly a = Poly::linear_root(f(1)) * Poly::linear_root(f(2));
  const Poly b = Poly::linear_root(f(2)) * Poly::linear_root(f(3));
  EXPECT_EQ(gcd(a, b), Poly::linear_root(f(2)));
}

TEST(PolyTest, DerivativeOfXToThePIsZero) {
  QuadraticField f(5);
  EXPECT_TRUE(Poly::monomial(f.one(), 5).derivative().is_zero());
  EXPECT_EQ(Poly::monomial(f.one(), 3).derivative(), Poly::monomial(f(3), 2));
}

TEST(PolyTest, OrderAtAndTaylorShift) {
  QuadraticField f(7);
  const Poly p = Poly::linear_root(f(3)).pow(4) * Poly::linear_root(f(1));
  EXPECT_EQ(p.order_at(f(3)), 4);
  EXPECT_EQ(p.order_at(f(1)), 1);
  EXPECT_EQ(p.order_at(f(2)), 0);
  const Poly shifted = p.taylor_shift(f(3));
  EXPECT_EQ(shifted.order_at(f(0)), 4);
  Gen gen;
  for (int s = 0; s < 20; ++s) {
    const Fq t = gen.element(f);
    const Fq x = gen.element(f);
    EXPECT_EQ(p.taylor_shift(t).evaluate(x), p.evaluate(x + t));
  }
}

TEST(PolyTest, SplitOverBaseField) {
  QuadraticField f(5);
  // x^5 - x splits into distinct linear factors over F_5.
  const Poly rhs = Poly::monomial(f.one(), 5) - Poly::monomial(f.one(), 1);
  const RationalRootSplit split = split_over_base_field(rhs);
  EXPECT_TRUE(split.splits());
  EXPECT_EQ(split.multiplicities.size(), 5u);
  // x^2 - 2 is irreducible over F_5.
  const Poly irreducible = Poly::monomial(f.one(), 2) - Poly::constant(f(2));
  EXPECT_FALSE(split_over_base_field(irreducible).splits());
}

TEST(RationalFunctionTest, NormalizesToLowestTerms) {
  QuadraticField f(7);
  const Poly num = Poly::linear_root(f(1)) * Poly::linear_root(f(2));
  const Poly den = f(3) * Poly::linear_root(f(2));
  const RationalFunction r(num, den);
  EXPECT_EQ(r.num(), f(3).inverse() * Poly::linear_root(f(1)));
  EXPECT_EQ(r.den(), Poly::constant(f.one()));
  EXPECT_TRUE(r.is_polynomial());
}

TEST(RationalFunctionTest, LaurentTerms) {
  QuadraticField f(7);
  // 1/(x - 2) + 3 (x - 2)^2
  const RationalFunction r = RationalFunction::linear_power(f(2), -1) +
                             RationalFunction(f(3) * Poly::linear_root(f(2)).pow(2));
  const auto terms = r.laurent_terms_at(f(2));
  ASSERT_TRUE(terms.has_value());
  EXPECT_EQ(terms->at(-1), f(1));
  EXPECT_EQ(terms->at(2), f(3));
  EXPECT_EQ(terms->size(), 2u);
  // Poles elsewhere are not expressible in x - 2 alone.
  EXPECT_FALSE(RationalFunction::linear_power(f(1), -1).laurent_terms_at(f(2)).has_value());
}

TEST(RationalFunctionProperty, FieldAxiomsAndMobius) {
  Gen gen;
  QuadraticField f(5);
  for (int s = 0; s < 30; ++s) {
    const RationalFunction a(random_poly(gen, f, 3), Poly::linear_root(gen.base(f)));
    const RationalFunction b(random_poly(gen, f, 2), Poly::linear_root(gen.base(f)).pow(2));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
    // Composition with x -> x + 1 then x -> x - 1 is the identity.
    const RationalFunction there = a.compose_mobius(f(1), f(1), f(0), f(1));
    EXPECT_EQ(there.compose_mobius(f(1), f(-1), f(0), f(1)), a);
  }
}

}  // namespace
}  // namespace canonrep

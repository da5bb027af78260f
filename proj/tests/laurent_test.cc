#include "canonrep/laurent.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace canonrep {
namespace {

using testing::Gen;
using testing::kPrimes;

TEST(LaurentSeriesTest, ArithmeticAndTruncation) {
  QuadraticField f(7);
  // (1 - u)^-1 = 1 + u + u^2 + ...
  const LaurentSeries one_minus_u(&f, 0, {f(1), f(-1)}, LaurentSeries::kExact);
  const LaurentSeries inv = one_minus_u.truncated(10).inverse();
  for (int e = 0; e < 10; ++e) EXPECT_EQ(inv.coefficient(e), f(1));
  EXPECT_THROW(inv.coefficient(10), InsufficientPrecision);
  const LaurentSeries u = LaurentSeries::monomial(f(1), 1, 20);
  EXPECT_EQ((u * u).valuation(), 2);
  EXPECT_EQ(u.pow(-3).valuation(), -3);
  EXPECT_EQ((u.pow(-3) * u.pow(3)).coefficient(0), f(1));
  EXPECT_THROW(LaurentSeries::monomial(f(1), 1).inverse(), InsufficientPrecision);
  EXPECT_EQ(LaurentSeries::monomial(f(3), 4).derivative().coefficient(3), f(12));
}

TEST(LaurentSeriesTest, PrecisionIsTracked) {
  QuadraticField f(5);
  const LaurentSeries s(&f, -1, {f(2), f(1), f(3)});
  EXPECT_EQ(s.order(), 2);
  EXPECT_EQ(s.leading(), f(2));
  EXPECT_EQ((s * s).order(), 1);
  EXPECT_THROW(s.coefficient(2), InsufficientPrecision);
}

TEST(LaurentAtTest, InverseXAtInfinity) {
  for (int p : kPrimes) {
    Curve c(p);
    const int order = 2 * p + 1;
    const LaurentSeries s = laurent_at(c.x_shift_power(0, -1), Place::infinity(), order);
    for (int e = 0; e < order; ++e) {
      const bool on = e == 2 || e == 2 * p;
      EXPECT_EQ(s.coefficient(e), c.scalar(on ? 1 : 0)) << "p=" << p << " e=" << e;
    }
  }
}

TEST(LaurentAtTest, SimpleExpansions) {
  Curve c(7);
  EXPECT_EQ(laurent_at(c.x(), Place::finite(0), 3).valuation(), 2);
  for (int t = 0; t < 7; ++t) {
    const LaurentSeries y = laurent_at(c.y(), Place::finite(static_cast<std::uint32_t>(t)), 20);
    EXPECT_EQ(y.valuation(), 1);
    for (int e = 1; e < 20; ++e) EXPECT_EQ(y.coefficient(e), c.scalar(e == 1 ? 1 : 0));
  }
  // x - t = -(u^2 + u^(2p) + ...) at P_t.
  const LaurentSeries z = local_coordinate(c, Place::finite(3), 30);
  EXPECT_EQ(z.coefficient(2), c.scalar(-1));
  EXPECT_EQ(z.coefficient(14), c.scalar(-1));
  EXPECT_EQ(z.coefficient(4), c.scalar(0));
}

TEST(LaurentAtTest, ClosedFormDxDuMatchesSeriesDerivative) {
  for (int p : {3, 5, 7}) {
    Curve c(p);
    const int order = 4 * p;
    for (const Place& q : c.places()) {
      const LaurentSeries x = laurent_at(c.x(), q, order);
      const LaurentSeries closed = dx_du(c, q, order - 1);
      const LaurentSeries numeric = x.derivative();
      for (int e = closed.valuation(); e < std::min(closed.order(), numeric.order()); ++e) {
        EXPECT_EQ(closed.coefficient(e), numeric.coefficient(e))
            << "p=" << p << " at " << q.name() << " e=" << e;
      }
    }
  }
}

TEST(ResidueTest, Examples) {
  for (int p : kPrimes) {
    Curve c(p);
    const Differential w = c.x_shift_power(0, -1) * c.dx();
    EXPECT_EQ(residue(w, Place::infinity()), c.scalar(-2));
    EXPECT_EQ(residue(w, Place::finite(0)), c.scalar(2));
    for (const Place& q : c.places()) {
      EXPECT_TRUE(residue(holomorphic_basis_form(c, 0), q).is_zero());
    }
  }
}

TEST(ResidueProperty, ResidueTheorem) {
  Gen gen;
  for (int p : kPrimes) {
    Curve c(p);
    for (int s = 0; s < 50; ++s) {
      const Differential w = gen.differential(c);
      Fq total = c.scalar(0);
      for (const Place& q : c.places()) total += residue(w, q);
      EXPECT_TRUE(total.is_zero()) << "p=" << p << " w=" << w.to_string();
    }
  }
}

TEST(SerrePairTest, GramMatrixIsScalarShift) {
  for (int p : kPrimes) {
    Curve c(p);
    const Matrix gram = gram_matrix(c);
    const Fq k = gram(0, 0);
    EXPECT_FALSE(k.is_zero());
    // The constant is -2 as an element of F_p.
    EXPECT_EQ(k, c.scalar(-2)) << p;
    EXPECT_EQ(gram, k * Matrix::identity(c.field_ptr(), c.genus()));
    EXPECT_TRUE(serre_pair(holomorphic_basis_form(c, 0), c.constant(0)).is_zero());
  }
}

TEST(SerrePairProperty, Bilinear) {
  Gen gen;
  Curve c(7);
  for (int s = 0; s < 20; ++s) {
    const Differential w1 = holomorphic_basis_form(c, gen.integer(0, 2));
    const Differential w2 = holomorphic_basis_form(c, gen.integer(0, 2));
    const CurveFunction f1 = gen.element(c.field()) * h1o_basis_function(c, gen.integer(1, 5));
    const CurveFunction f2 = gen.element(c.field()) * c.x_shift_power(0, -gen.integer(1, 4));
    const Fq a = gen.element(c.field());
    EXPECT_EQ(serre_pair(w1 + a * w2, f1), serre_pair(w1, f1) + a * serre_pair(w2, f1));
    EXPECT_EQ(serre_pair(w1, f1 + a * f2), serre_pair(w1, f1) + a * serre_pair(w1, f2));
  }
}

}  // namespace
}  // namespace canonrep

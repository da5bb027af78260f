#include "canonrep/finite_field.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace canonrep {
namespace {

using testing::Gen;

// Schoolbook arithmetic on pairs, independent of Fq.
struct Pair {
  std::int64_t a, b;
};

Pair oracle_mul(Pair x, Pair y, std::int64_t n, std::int64_t p) {
  return {((x.a * y.a + n * x.b * y.b) % p + p) % p, ((x.a * y.b + x.b * y.a) % p + p) % p};
}

std::int64_t smallest_nonresidue(std::int64_t p) {
  std::set<std::int64_t> squares;
  for (std::int64_t k = 1; k < p; ++k) squares.insert(k * k % p);
  for (std::int64_t n = 2; n < p; ++n) {
    if (!squares.contains(n)) return n;
  }
  return -1;
}

TEST(FiniteFieldTest, BaseFieldExamples) {
  QuadraticField f(7);
  EXPECT_EQ(f(3) * f(5), f(1));
  EXPECT_EQ(f(3).inverse(), f(5));
  EXPECT_EQ(f.delta() * f.delta(), f(f.nonresidue()));
}

TEST(FiniteFieldTest, NonresidueIsSmallest) {
  EXPECT_EQ(QuadraticField(7).nonresidue(), 3u);
  EXPECT_EQ(QuadraticField(5).nonresidue(), 2u);
  for (int p : {3, 11, 13, 17, 19, 23, 29, 31}) {
    EXPECT_EQ(QuadraticField(p).nonresidue(), static_cast<std::uint32_t>(smallest_nonresidue(p)))
        << p;
  }
}

TEST(FiniteFieldTest, SquareRootOfMinusOne) {
  QuadraticField f13(13);
  EXPECT_EQ(f13.i(), f13(5));
  for (int p : {3, 5, 7, 11, 13}) {
    QuadraticField f(p);
    EXPECT_EQ(f.i() * f.i(), f(-1)) << p;
    EXPECT_EQ(f.i().in_base_field(), p % 4 == 1) << p;
  }
}

TEST(FiniteFieldTest, SqrtExamples) {
  QuadraticField f(7);
  const SquareRoot r2 = f.sqrt(f(2));
  EXPECT_TRUE(r2.in_base_field);
  EXPECT_TRUE(r2.root == f(3) || r2.root == f(4));
  const SquareRoot r3 = f.sqrt(f(3));
  EXPECT_FALSE(r3.in_base_field);
  EXPECT_NE(r3.root.im(), 0u);
  QuadraticField f13(13);
  EXPECT_EQ(f13.sqrt(f13(1)).root, f13(1));
  EXPECT_TRUE(f13.sqrt(f13(1)).in_base_field);
}

TEST(FiniteFieldTest, SqrtExhaustiveAndCanonical) {
  for (int p : {3, 5, 7, 11, 13}) {
    QuadraticField f(p);
    for (int a = 1; a < p; ++a) {
      const SquareRoot r = f.sqrt(f(a));
      EXPECT_EQ(r.root * r.root, f(a)) << p << " " << a;
      EXPECT_EQ(r.in_base_field, f.legendre(static_cast<std::uint32_t>(a)) == 1);
      EXPECT_LE(r.root, -r.root);
    }
  }
}

TEST(FiniteFieldTest, Errors) {
  QuadraticField f(7);
  EXPECT_THROW(f(0).inverse(), DivisionByZero);
  EXPECT_THROW(f(3) / f(0), DivisionByZero);
  EXPECT_THROW(f.sqrt(f(0)), ZeroInput);
  EXPECT_THROW(QuadraticField(2), NotAnOddPrime);
  EXPECT_THROW(QuadraticField(9), NotAnOddPrime);
  EXPECT_THROW(QuadraticField(-7), NotAnOddPrime);
}

TEST(FiniteFieldTest, MultiplicationMatchesOracle) {
  Gen gen;
  for (int p : {3, 5, 7, 11, 13, 31}) {
    QuadraticField f(p);
    for (int s = 0; s < 200; ++s) {
      const Fq x = gen.element(f);
      const Fq y = gen.element(f);
      const Pair want = oracle_mul({x.re(), x.im()}, {y.re(), y.im()}, f.nonresidue(), p);
      const Fq got = x * y;
      EXPECT_EQ(got.re(), static_cast<std::uint32_t>(want.a));
      EXPECT_EQ(got.im(), static_cast<std::uint32_t>(want.b));
    }
  }
}

TEST(FiniteFieldProperty, RingAxioms) {
  Gen gen;
  for (int p : {5, 7, 13}) {
    QuadraticField f(p);
    for (int s = 0; s < 200; ++s) {
      const Fq x = gen.element(f);
      const Fq y = gen.element(f);
      const Fq z = gen.element(f);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x - x, f.zero());
    }
  }
}

TEST(FiniteFieldProperty, Inverses) {
  Gen gen;
  for (int p : {3, 7, 11}) {
    QuadraticField f(p);
    for (int s = 0; s < 200; ++s) {
      const Fq x = gen.nonzero(f);
      EXPECT_EQ(x * (f.one() / x), f.one());
      EXPECT_EQ(x.pow(-1), x.inverse());
      EXPECT_EQ(x.pow(p * p - 1), f.one());
    }
  }
}

TEST(FiniteFieldProperty, FrobeniusIsConjugation) {
  Gen gen;
  for (int p : {3, 5, 7, 11, 13}) {
    QuadraticField f(p);
    for (int s = 0; s < 100; ++s) {
      const Fq x = gen.element(f);
      EXPECT_EQ(x.pow(p), x.conjugate());
      EXPECT_EQ(f(x.norm()), x * x.conjugate());
    }
  }
}

TEST(FiniteFieldTest, ElementCounts) {
  QuadraticField f(5);
  EXPECT_EQ(f.base_elements().size(), 5u);
  EXPECT_EQ(f.all_elements().size(), 25u);
  const std::uint32_t g = f.primitive_root();
  std::set<std::uint32_t> powers;
  for (int k = 0; k < 4; ++k) powers.insert(f.pow_mod(g, static_cast<std::uint64_t>(k)));
  EXPECT_EQ(powers.size(), 4u);
}

}  // namespace
}  // namespace canonrep

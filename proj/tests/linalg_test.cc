#include "canonrep/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "test_support.hpp"

namespace canonrep {
namespace {

using testing::Gen;

Matrix random_matrix(Gen& gen, const QuadraticField& f, int rows, int cols) {
  Matrix m(&f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = gen.element(f);
  }
  return m;
}

// Leibniz expansion, independent of elimination.
Fq leibniz_det(const Matrix& m) {
  std::vector<int> perm(static_cast<std::size_t>(m.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  Fq total = m.field()->zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    Fq term = m.field()->one();
    for (int r = 0; r < m.rows(); ++r) term = term * m(r, perm[static_cast<std::size_t>(r)]);
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(MatrixTest, IdentityAndBlocks) {
  QuadraticField f(7);
  Matrix id = Matrix::identity(&f, 3);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.rank(), 3);
  Matrix big(&f, 4, 4);
  big.set_block(1, 1, id);
  EXPECT_EQ(big.block(1, 1, 3, 3), id);
  EXPECT_TRUE(big.block(0, 0, 1, 4).is_zero());
  EXPECT_EQ(big.transpose(), big);
}

TEST(MatrixTest, SingularInverseThrows) {
  QuadraticField f(5);
  Matrix m(&f, 2, 2);
  m(0, 0) = f(1);
  m(0, 1) = f(2);
  m(1, 0) = f(2);
  m(1, 1) = f(4);
  EXPECT_EQ(m.rank(), 1);
  EXPECT_THROW(m.inverse(), SingularMatrix);
}

TEST(MatrixProperty, RankAgreesWithDeterminant) {
  Gen gen;
  for (int p : {3, 5}) {
    QuadraticField f(p);
    for (int s = 0; s < 100; ++s) {
      const Matrix m = random_matrix(gen, f, 3, 3);
      const bool invertible = !leibniz_det(m).is_zero();
      EXPECT_EQ(m.rank() == 3, invertible) << m.to_string();
      if (invertible) {
        EXPECT_TRUE((m * m.inverse()).is_identity());
        EXPECT_TRUE((m.inverse() * m).is_identity());
        EXPECT_EQ(m.pow(-2) * m.pow(2), Matrix::identity(&f, 3));
      }
    }
  }
}

TEST(MatrixProperty, DeterminantIsMultiplicative) {
  Gen gen;
  QuadraticField f(11);
  for (int s = 0; s < 50; ++s) {
    const Matrix a = random_matrix(gen, f, 3, 3);
    const Matrix b = random_matrix(gen, f, 3, 3);
    EXPECT_EQ(leibniz_det(a * b), leibniz_det(a) * leibniz_det(b));
  }
}

TEST(MatrixProperty, NullspaceAndSolve) {
  Gen gen;
  QuadraticField f(7);
  for (int s = 0; s < 50; ++s) {
    const int rows = gen.integer(1, 5);
    const int cols = gen.integer(1, 6);
    Matrix m = random_matrix(gen, f, rows, cols);
    // Force a dependent column now and then.
    if (cols > 1 && gen.integer(0, 1) == 1) {
      for (int r = 0; r < rows; ++r) m(r, cols - 1) = f(2) * m(r, 0);
    }
    const std::vector<Vec> kernel = nullspace(m);
    EXPECT_EQ(static_cast<int>(kernel.size()) + m.rank(), cols);
    for (const Vec& v : kernel) {
      EXPECT_FALSE(is_zero(v));
      EXPECT_TRUE(is_zero(m * v));
    }
    Vec x(static_cast<std::size_t>(cols), f.zero());
    for (Fq& e : x) e = gen.element(f);
    const Vec b = m * x;
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m * *sol, b);
  }
}

TEST(MatrixTest, InconsistentSystem) {
  QuadraticField f(5);
  Matrix m(&f, 2, 1);
  m(0, 0) = f(1);
  m(1, 0) = f(1);
  EXPECT_FALSE(solve(m, {f(1), f(2)}).has_value());
}

TEST(MatrixTest, RrefPivots) {
  QuadraticField f(3);
  Matrix m(&f, 2, 3);
  m(0, 1) = f(2);
  m(1, 1) = f(1);
  m(1, 2) = f(1);
  const std::vector<int> pivots = rref(m);
  EXPECT_EQ(pivots, (std::vector<int>{1, 2}));
  EXPECT_EQ(m(0, 1), f(1));
  EXPECT_TRUE(m(0, 2).is_zero());
}

TEST(SubspaceProperty, SpanMembership) {
  Gen gen;
  QuadraticField f(5);
  for (int s = 0; s < 30; ++s) {
    Subspace sub(&f, 5);
    std::vector<Vec> gens;
    for (int k = 0; k < 3; ++k) {
      Vec v(5, f.zero());
      for (Fq& e : v) e = gen.element(f);
      gens.push_back(v);
      sub.add(v);
    }
    EXPECT_LE(sub.dim(), 3);
    const Vec combo = add(scale(gen.element(f), gens[0]), scale(gen.element(f), gens[2]));
    EXPECT_TRUE(sub.contains(combo));
    EXPECT_FALSE(sub.add(combo));
    EXPECT_TRUE(is_zero(sub.reduce(combo)));
    EXPECT_EQ(sub.dim(), Matrix::from_columns(&f, 5, gens).rank());
  }
  Subspace line(&f, 2);
  line.add(unit_vector(&f, 2, 0));
  EXPECT_FALSE(line.contains(unit_vector(&f, 2, 1)));
}

}  // namespace
}  // namespace canonrep

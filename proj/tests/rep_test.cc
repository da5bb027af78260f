#include "canonrep/rep.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace canonrep {
namespace {

using testing::Gen;
using testing::kPrimes;

std::vector<Matrix> ones(const AutGroup& g, int n) {
  return std::vector<Matrix>(g.generators().size(),
                             Matrix::identity(g.curve().field_ptr(), n));
}

TEST(CanonicalRepTest, HomomorphismOnRandomPairs) {
  Gen gen;
  for (int p : kPrimes) {
    Curve c(p);
    AutGroup g(c);
    const MatrixRep rho = canonical_rep(g);
    EXPECT_EQ(rho.dim(), c.genus());
    EXPECT_TRUE(rho.closure().homomorphism) << rho.closure().first_failure;
    EXPECT_EQ(rho.closure().reached, g.order());
    for (int s = 0; s < 50; ++s) {
      const GroupElement& a = gen.group_element(g);
      const GroupElement& b = gen.group_element(g);
      EXPECT_EQ(rho(g.mul(a, b)), rho(a) * rho(b));
      EXPECT_EQ(rho(g.inv(a)), rho(a).inverse());
    }
    EXPECT_TRUE(rho(g.identity()).is_identity());
  }
}

TEST(CanonicalRepTest, MatchesSubstitutionOfGenerators) {
  for (int p : {5, 7}) {
    Curve c(p);
    AutGroup g(c);
    const MatrixRep rho = canonical_rep(g);
    for (const GroupElement& s : g.generators()) {
      EXPECT_EQ(rho(s), rep_from_substitution(g, canonical_substitution_matrix(g, s)));
    }
    // alpha acts as -1 on every holomorphic form.
    EXPECT_EQ(rho(g.alpha()), c.scalar(-1) * Matrix::identity(c.field_ptr(), c.genus()));
  }
}

TEST(SymPowerTest, PhiIntertwines) {
  for (int p : kPrimes) {
    Curve c(p);
    AutGroup g(c);
    const PhiReport r = check_phi_equivariance(g);
    EXPECT_TRUE(r.pass) << r.counterexample;
    EXPECT_EQ(sym_power_rep(g, c.genus() - 1).dim(), c.genus());
  }
}

TEST(SymPowerTest, SmallExample) {
  QuadraticField f(5);
  // u -> u + v, v -> v on u^i v^(1-i): u -> u + v, v -> v.
  const Matrix m = sym_power_matrix(&f, 1, 1, 1, 0, 1);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.pow(5), Matrix::identity(&f, 2));
  EXPECT_FALSE(m.is_identity());
}

TEST(NortonTest, CanonicalRepIsAbsolutelyIrreducible) {
  for (int p : kPrimes) {
    Curve c(p);
    AutGroup g(c);
    const IrreducibilityResult r = is_absolutely_irreducible(canonical_rep(g));
    EXPECT_TRUE(r.irreducible) << p;
    EXPECT_TRUE(r.absolutely_irreducible) << p;
    EXPECT_EQ(r.end_dim, 1);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(NortonTest, TrivialAndDirectSums) {
  Curve c(7);
  AutGroup g(c);
  const IrreducibilityResult trivial = is_absolutely_irreducible(ones(g, 1));
  EXPECT_TRUE(trivial.absolutely_irreducible);
  const IrreducibilityResult two = is_absolutely_irreducible(ones(g, 2));
  EXPECT_FALSE(two.irreducible);
  ASSERT_TRUE(two.witness.has_value());
  EXPECT_EQ(two.witness->size(), 1u);

  const MatrixRep rho = canonical_rep(g);
  const MatrixRep sum = direct_sum(rho, contragredient(rho));
  const IrreducibilityResult r = is_absolutely_irreducible(sum);
  EXPECT_FALSE(r.irreducible);
  ASSERT_TRUE(r.witness.has_value());
  // The witness spans an invariant subspace.
  const Subspace w = spin(*r.witness, sum);
  EXPECT_EQ(w.dim(), static_cast<int>(r.witness->size()));
  EXPECT_LT(w.dim(), sum.dim());
}

TEST(HomSpaceTest, Dimensions) {
  Curve c(5);
  AutGroup g(c);
  const MatrixRep rho = canonical_rep(g);
  EXPECT_EQ(hom_space(rho, rho).size(), 1u);
  EXPECT_EQ(commutant_dim(rho.images()), 1);
  const MatrixRep sum = direct_sum(rho, rho);
  EXPECT_EQ(hom_space(rho, sum).size(), 2u);
  EXPECT_EQ(hom_space(sum, rho).size(), 2u);
  EXPECT_EQ(commutant_dim(sum.images()), 4);
  for (const Matrix& x : hom_space(rho, sum)) {
    for (std::size_t k = 0; k < rho.images().size(); ++k) {
      EXPECT_EQ(x * rho.images()[k], sum.images()[k] * x);
    }
  }
}

TEST(SpinTest, FullSpaceFromOneVector) {
  Curve c(11);
  AutGroup g(c);
  const MatrixRep rho = canonical_rep(g);
  const Subspace s = spin({unit_vector(c.field_ptr(), rho.dim(), 0)}, rho);
  EXPECT_EQ(s.dim(), rho.dim());
}

TEST(PairingTest, H1OIsContragredient) {
  for (int p : kPrimes) {
    Curve c(p);
    AutGroup g(c);
    const H1OReport r = check_h1o_geometric(g);
    EXPECT_TRUE(r.matches_contragredient) << r.counterexample;
  }
}

TEST(PairingProperty, EquivariantOnRandomElements) {
  Gen gen;
  for (int p : {5, 7}) {
    Curve c(p);
    AutGroup g(c);
    const MatrixRep dual = contragredient(canonical_rep(g));
    for (int s = 0; s < 20; ++s) {
      const GroupElement& h = gen.group_element(g);
      EXPECT_EQ(rep_from_substitution(g, h1o_substitution_matrix(g, h)), dual(h))
          << h.to_string();
    }
  }
}

TEST(InducedTest, DimensionAndHomomorphism) {
  for (int p : kPrimes) {
    Curve c(p);
    AutGroup g(c);
    const SubgroupInfo info = g.theta_and_subgroup();
    const MatrixRep sym = sym_power_rep(g, c.genus() - 1);
    const MatrixRep ind = induced_rep(sym, info.cosets);
    EXPECT_EQ(ind.dim(), info.index * c.genus());
    EXPECT_TRUE(ind.closure().homomorphism) << ind.closure().first_failure;
    EXPECT_EQ(ind.closure().reached, g.order());
  }
}

TEST(EmbeddingTest, FrobeniusMapAlwaysWorks) {
  for (int p : kPrimes) {
    Curve c(p);
    AutGroup g(c);
    const EmbeddingReport r = check_embedding(g);
    EXPECT_EQ(r.hom_dim, 1) << p;
    EXPECT_TRUE(r.frobenius_equivariant);
    EXPECT_TRUE(r.frobenius_injective);
    EXPECT_EQ(r.alpha_cosets_tile, p % 4 == 3);
  }
}

}  // namespace
}  // namespace canonrep

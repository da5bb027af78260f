#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "canonrep/group.hpp"
#include "canonrep/linalg.hpp"

namespace canonrep {

class Inconclusive : public std::runtime_error {
 public:
  explicit Inconclusive(const std::string& what) : std::runtime_error(what) {}
};

class CosetMismatch : public std::runtime_error {
 public:
  explicit CosetMismatch(const std::string& what) : std::runtime_error(what) {}
};

class ExpansionFailure : public std::runtime_error {
 public:
  explicit ExpansionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ClosureReport {
  std::size_t reached = 0;
  bool homomorphism = true;
  std::string first_failure;
};

// Generator images of a representation of G (or of a subgroup of G). The
// matrix of every element of the generated subgroup is filled in on first
// use by a breadth-first walk of the Cayley graph, which also checks
// rho(x s) = rho(x) rho(s) on every edge.
class MatrixRep {
 public:
  MatrixRep(const AutGroup* group, std::string name, std::vector<GroupElement> generators,
            std::vector<Matrix> images);

  const AutGroup& group() const { return *group_; }
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const QuadraticField* field() const;
  const std::vector<GroupElement>& generators() const { return generators_; }
  const std::vector<Matrix>& images() const { return images_; }

  // Throws std::out_of_range when g is outside the generated subgroup.
  const Matrix& operator()(const GroupElement& g) const;
  bool contains(const GroupElement& g) const;
  const ClosureReport& closure() const;

 private:
  struct Cache {
    std::once_flag once;
    std::unordered_map<std::uint64_t, Matrix> matrices;
    ClosureReport report;
  };
  void build() const;

  const AutGroup* group_;
  std::string name_;
  int dim_ = 0;
  std::vector<GroupElement> generators_;
  std::vector<Matrix> images_;
  std::shared_ptr<Cache> cache_;
};

// Rep matrix from the matrix of the substitution operator, so that
// rho(g) rho(h) = rho(g h) whichever way substitution composes.
Matrix rep_from_substitution(const AutGroup& group, const Matrix& substitution);

// Columns: coordinates of act(g, x^i dx / y) in the basis x^i dx / y.
// Throws ExpansionFailure if an image is not a global form.
Matrix canonical_substitution_matrix(const AutGroup& group, const GroupElement& g);
MatrixRep canonical_rep(const AutGroup& group);

// Substitution u -> a u + b v, v -> c u + d v on the basis u^i v^(m-i).
Matrix sym_power_matrix(const QuadraticField* field, int m, std::int64_t a, std::int64_t b,
                        std::int64_t c, std::int64_t d);
// Sym^m of the standard representation, as a representation of H.
MatrixRep sym_power_rep(const AutGroup& group, int m);

struct PhiReport {
  bool pass = true;
  std::string counterexample;
};
// x^i dx / y -> u^i v^(g-1-i) intertwines canonical_rep restricted to H with
// Sym^(g-1), checked on the generators of H.
PhiReport check_phi_equivariance(const AutGroup& group);

Subspace spin(const std::vector<Vec>& seeds, const std::vector<Matrix>& generators);
Subspace spin(const std::vector<Vec>& seeds, const MatrixRep& rep);

struct IrreducibilityResult {
  bool irreducible = false;
  int end_dim = 0;
  bool absolutely_irreducible = false;
  // Basis of a proper invariant subspace when reducible.
  std::optional<std::vector<Vec>> witness;
  int attempts = 0;
};
// Norton's test over F_{p^2}. Throws Inconclusive when `budget` algebra
// elements were tried without a verdict.
IrreducibilityResult is_absolutely_irreducible(const std::vector<Matrix>& generators,
                                               int budget = 64);
IrreducibilityResult is_absolutely_irreducible(const MatrixRep& rep, int budget = 64);

// Matrices X (dim b x dim a) with X rho_a(s) = rho_b(s) X for every generator.
std::vector<Matrix> hom_space(const std::vector<Matrix>& a, const std::vector<Matrix>& b);
std::vector<Matrix> hom_space(const MatrixRep& a, const MatrixRep& b);
int commutant_dim(const std::vector<Matrix>& generators);

MatrixRep contragredient(const MatrixRep& rep);
MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);

// Substitution matrix on the classes of y x^-j (j = 1..g) in H^1(X, O),
// read off through the residue pairing on the translated cover.
Matrix h1o_substitution_matrix(const AutGroup& group, const GroupElement& g);
struct H1OReport {
  bool matches_contragredient = true;
  std::string counterexample;
};
H1OReport check_h1o_geometric(const AutGroup& group);

// Ind_H^G V with basis r_k (x) v for the left coset representatives r_k.
MatrixRep induced_rep(const MatrixRep& v, const std::vector<GroupElement>& cosets);

struct EmbeddingReport {
  int hom_dim = 0;
  // Representatives used for Ind. Powers of alpha when those tile G.
  std::vector<GroupElement> cosets;
  bool alpha_cosets_tile = false;
  // w -> sum_k r_k (x) phi(rho(r_k)^-1 w)
  bool frobenius_equivariant = false;
  bool frobenius_injective = false;
  // (v, -v) for p = 1 mod 4; the twisted four-block map for p = 3 mod 4.
  bool literal_equivariant = false;
  bool literal_injective = false;
  bool literal_equals_frobenius = false;
};
EmbeddingReport check_embedding(const AutGroup& group);

}  // namespace canonrep

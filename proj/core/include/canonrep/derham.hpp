#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "canonrep/curve.hpp"
#include "canonrep/group.hpp"
#include "canonrep/linalg.hpp"
#include "canonrep/rep.hpp"

namespace canonrep {

class ValidationFailure : public std::runtime_error {
 public:
  explicit ValidationFailure(const std::string& what) : std::runtime_error(what) {}
};

class ResidualClassError : public std::runtime_error {
 public:
  explicit ResidualClassError(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedGenerator : public std::runtime_error {
 public:
  explicit UnsupportedGenerator(const std::string& what) : std::runtime_error(what) {}
};

// Opens U_k = X - excluded[k], in order.
struct Cover {
  std::vector<Place> excluded;

  // {X - P0, X - Pinf}
  static Cover standard();
  // {X - P1, X - Pinf}
  static Cover shifted();
  // {X - P0, X - Pinf, X - P1}
  static Cover triple();

  std::size_t size() const { return excluded.size(); }
  std::string to_string() const;
  friend bool operator==(const Cover&, const Cover&) = default;
};

// Forms omega_k on U_k and functions f_jk (j < k) on U_j n U_k.
struct HyperCocycle {
  Cover cover;
  std::vector<Differential> forms;
  std::map<std::pair<int, int>, CurveFunction> overlaps;

  // f_jk for j != k, with f_kj = -f_jk.
  CurveFunction f(int j, int k) const;

  friend HyperCocycle operator+(const HyperCocycle& a, const HyperCocycle& b);
  friend HyperCocycle operator-(const HyperCocycle& a, const HyperCocycle& b);
  friend HyperCocycle operator*(const Fq& s, const HyperCocycle& a);
  friend bool operator==(const HyperCocycle& a, const HyperCocycle& b);
};

HyperCocycle two_open_cocycle(Cover cover, Differential w1, Differential w2, CurveFunction f12);
// (d f1, d f2, f1 - f2)
HyperCocycle coboundary(const Cover& cover, const CurveFunction& f1, const CurveFunction& f2);

struct ValidationResult {
  bool valid = true;
  std::vector<std::string> failures;
  explicit operator bool() const { return valid; }
};
ValidationResult validate_cocycle(const HyperCocycle& c);

// binom(n, k) reduced mod p.
Fq binomial(const QuadraticField& field, int n, int k);

// (x^i dx / y, x^i dx / y, 0), i = 0..g-1
HyperCocycle tau_cocycle(const Curve& curve, int i);
// ((1-2l) x^(1-g-l) d(y x^(-g-1)), -2l x^(2g-l) dy, y x^-l) for any l >= 1;
// a basis class for 1 <= l <= g.
HyperCocycle eta_cocycle(const Curve& curve, int l);

// Lift of eta_i to the triple cover. `literal_sign` keeps the overlap
// function on (X - Pinf) n (X - P1) with the sign of the summation formula
// sum_m binom(p-i, m) y (x-1)^(m-p); otherwise it is negated, which is the
// sign for which d f_23 = omega_2 - omega_3.
HyperCocycle nu_cocycle(const Curve& curve, int i, bool literal_sign = false);
// The restriction of a triple-cover cocycle to the opens (a, b).
HyperCocycle restrict_to(const HyperCocycle& c, int a, int b);

struct DeRhamBasis {
  std::vector<HyperCocycle> tau;
  std::vector<HyperCocycle> eta;
  std::vector<HyperCocycle> nu;
};
// Throws ValidationFailure naming the first broken condition.
DeRhamBasis build_basis(const Curve& curve);

struct NuDiagnostics {
  bool valid = false;
  bool literal_sign_valid = false;
  std::string literal_sign_failure;
  // v_Pinf(f_13); at least 1 when f_13 = O(u).
  int f13_valuation_at_infinity = 0;
  bool projects_to_eta = false;
  // sum_m binom(p-i, m) y (x-1)^(m-p) == y (x^(p-i) - 1) / (x-1)^p
  bool sum_equals_closed_form = false;
};
NuDiagnostics nu_diagnostics(const Curve& curve, int i, int series_order);

// Per-prime de Rham machinery: basis, coordinates and the generator action
// on H^1_dR in the ordered basis (tau_0..tau_(g-1), eta_1..eta_g).
class DeRham {
 public:
  explicit DeRham(const AutGroup& group);

  const Curve& curve() const { return group_.curve(); }
  const AutGroup& group() const { return group_; }
  int genus() const { return curve().genus(); }
  // <x^(j-1) dx / y, y x^-j>, the same for every j.
  const Fq& gram_constant() const { return gram_; }
  const DeRhamBasis& basis() const { return basis_; }

  HyperCocycle substitute(const GroupElement& g, const HyperCocycle& c) const;
  // Brings a two-open cocycle on {X - Q, X - Pinf} (either order) to the
  // standard cover. Throws UnsupportedGenerator for other covers.
  HyperCocycle to_standard_cover(const HyperCocycle& c) const;
  // Throws ResidualClassError on inputs that are not cocycles.
  Vec class_to_coordinates(const HyperCocycle& c) const;

  // Coordinates of sigma applied to eta_i: through nu_i restricted to
  // (X - P1, X - Pinf), or directly from eta_i on the standard cover.
  Vec sigma_eta_via_lift(int i) const;
  Vec sigma_eta_direct(int i) const;

  // Column k: coordinates of the substitution image of basis class k.
  // Throws UnsupportedGenerator for elements outside group().generators().
  Matrix substitution_matrix(const GroupElement& g) const;
  MatrixRep assemble_rep() const;

 private:
  const AutGroup& group_;
  Fq gram_;
  DeRhamBasis basis_;
};

struct SplittingCertificate {
  // Route 1: s with rho(g) s = s Q(g) for all generators and pi s = I.
  bool section_exists = false;
  std::optional<Matrix> section;
  // Route 2: the complement inside the T-eigenspaces span{tau_(g-l-1), eta_(l+1)}
  // made sigma-stable.
  bool eigenspaces_as_expected = false;
  bool eigen_system_feasible = false;
  bool routes_agree = false;
  bool splits = false;
};
// `rep` must be block upper triangular in the (tau, eta) basis.
SplittingCertificate splitting_certificate(const MatrixRep& rep);
// The rep with the off-diagonal block removed.
MatrixRep block_diagonal_control(const MatrixRep& rep);

struct IndecomposabilityCertificate {
  bool sub_absolutely_irreducible = false;
  bool quotient_absolutely_irreducible = false;
  bool splits = true;
  bool indecomposable = false;
  bool nonprojective = false;
  int end_dim = 0;
};
// Throws Inconclusive when a factor's irreducibility cannot be decided.
IndecomposabilityCertificate indecomposability_certificate(const MatrixRep& rep,
                                                           int norton_budget = 64);

struct RewritingCheck {
  // [eta~_(p-j)] == -2j tau_(j-1) for every 1 <= j <= g.
  bool matches_printed = true;
  // Measured c_j with [eta~_(p-j)] == c_j tau_(j-1).
  std::vector<Fq> measured;
  bool pure_tau = true;
};
RewritingCheck check_rewriting(const DeRham& dr);

struct SigmaCrossCheck {
  // sigma(omega_3, omega_2, f) == -(i/(p-i)) sum_j binom(p-i, j) eta~_(p-j) as cocycles.
  bool cocycle_identity_holds = true;
  // The printed expansion of sigma eta_(l+1) in the tau/eta basis.
  bool printed_expansion_matches = true;
  std::vector<std::string> diffs;
  // The lifted and the direct computation of sigma eta_i agree.
  bool routes_agree = true;
};
SigmaCrossCheck check_sigma_expansion(const DeRham& dr);

}  // namespace canonrep

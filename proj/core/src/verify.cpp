#include "canonrep/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "canonrep/curve.hpp"
#include "canonrep/derham.hpp"
#include "canonrep/group.hpp"
#include "canonrep/laurent.hpp"
#include "canonrep/rep.hpp"
#include "json.hpp"

namespace canonrep {

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> registry = {
      {"aut_order", "group",
       "Aut(X) is the quotient of {(m, u) : m in GL2(Fp), u^2 = det m} by Fp^x and has order "
       "2(p-1)p(p+1).",
       "Enumerates every canonical pair (m, u), checks closure under the group law and "
       "compares the count with 2(p-1)p(p+1)."},
      {"theta_kernel_index", "group",
       "theta: SL2(Fp) -> G has kernel of size 1 (p = 1 mod 4) or 2 (p = 3 mod 4), and its "
       "image H has index 2 or 4 respectively.",
       "Maps all of SL2(Fp) into G, counts the kernel and the image."},
      {"orbit_infinity", "group",
       "The orbit of the point at infinity is the set of all p+1 Weierstrass points, with "
       "stabilizer of order 2p(p-1).",
       "Applies every element of G to Pinf and counts images and fixers."},
      {"HDbasis", "canonical_rep",
       "{x^i dx / y : 0 <= i < g} is a basis of H0(X, Omega1).",
       "Computes the divisor of each form at all ramified places (all effective, degree "
       "2g-2) and checks the forms are independent."},
      {"irrHom", "irreducibility",
       "x^i dx / y -> u^i v^(g-1-i) is a k[H]-module isomorphism H0(X, Omega1) -> "
       "Sym^(g-1).",
       "Compares the substitution matrices of the generators of H on both sides."},
      {"irreducible", "irreducibility",
       "H0(X, Omega1) is an irreducible k[G]-module and H1(X, O) is naturally its "
       "contragredient.",
       "Norton's test over F_{p^2} on both modules with commutant dimension 1, and the "
       "residue-pairing matrices on H1(X, O) against the inverse transposes."},
      {"residue_pairing", "pairing",
       "The residue pairing <w, f> = sum of residues identifies H1(X, O) with the dual of "
       "H0(X, Omega1); res_Pinf(x^-1 dx) = -2.",
       "Computes res_Pinf(x^-1 dx), the Gram matrix of x^(j-1) dx / y against y x^-j, and "
       "the residue theorem on seeded random differentials."},
      {"induced_embedding", "induced",
       "H0(X, Omega1) embeds into Ind_H^G Sym^(g-1) as a subrepresentation.",
       "Computes dim Hom_G(H0(X, Omega1), Ind) and checks the Frobenius reciprocity map is "
       "equivariant and injective; the explicit block map is reported alongside."},
      {"basisdR", "derham_basis",
       "The classes tau_i (0 <= i < g) and eta_l (1 <= l <= g) form a basis of H1_dR(X) "
       "computed on {X - P0, X - Pinf}.",
       "Validates every cocycle condition, checks that coordinate extraction inverts the "
       "basis and annihilates seeded random coboundaries."},
      {"nubasisHdR", "derham_basis",
       "nu_i is a well-defined hyper 1-cocycle on {X - P0, X - Pinf, X - P1} restricting "
       "to eta_i.",
       "Validates the three-open cocycle conditions, the restriction to the first two opens "
       "and the vanishing of f_13 at Pinf."},
      {"nosplit", "splitting",
       "0 -> H0(X, Omega1) -> H1_dR(X) -> H1(X, O) -> 0 does not split as k[G]-modules.",
       "Solves for a G-equivariant section and, independently, for a sigma-stable "
       "complement inside the torus eigenspaces; both must be infeasible while the "
       "block-diagonal control splits."},
      {"indecomposable", "indecomposability",
       "H1_dR(X) is a non-projective indecomposable k[G]-module.",
       "Both composition factors are absolutely irreducible and the sequence does not split; "
       "p does not divide 2g."},
  };
  return registry;
}

const ClaimInfo& claim_info(std::string_view id) {
  for (const ClaimInfo& c : claim_registry()) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("unknown claim id: " + std::string(id));
}

std::string explain(std::string_view id) {
  const ClaimInfo& c = claim_info(id);
  std::ostringstream os;
  os << c.id << " (stage: " << c.stage << ")\n"
     << "  statement: " << c.statement << "\n"
     << "  check:     " << c.check << "\n";
  return os.str();
}

bool CertificationReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimOutcome& c) { return c.status == ClaimStatus::kPass; });
}

const ClaimOutcome& CertificationReport::claim(std::string_view id) const {
  for (const ClaimOutcome& c : claims) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("claim not in report: " + std::string(id));
}

bool all_pass(const std::vector<CertificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CertificationReport& r) { return r.all_pass(); });
}

namespace {

std::string str(const Fq& x) { return x.to_string(); }

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += sep;
    out += parts[k];
  }
  return out;
}

class StageFailed : public std::runtime_error {
 public:
  explicit StageFailed(const std::string& what) : std::runtime_error(what) {}
};

// State for one prime, owned by a single worker.
class PrimeRun {
 public:
  PrimeRun(int p, const SuiteConfig& config)
      : config_(config),
        rng_(config.rng_seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(p))) {
    report_.prime = p;
    report_.norton_budget = config.norton_budget;
    for (const ClaimInfo& c : claim_registry()) {
      report_.claims.push_back({std::string(c.id), ClaimStatus::kSkipped, ""});
    }
  }

  CertificationReport run() {
    stage("group", [this] { group_stage(); });
    stage("canonical_rep", [this] { canonical_stage(); });
    stage("irreducibility", [this] { irreducibility_stage(); });
    stage("pairing", [this] { pairing_stage(); });
    stage("induced", [this] { induced_stage(); });
    stage("derham_basis", [this] { basis_stage(); });
    stage("action", [this] { action_stage(); });
    stage("splitting", [this] { splitting_stage(); });
    stage("indecomposability", [this] { indecomposability_stage(); });
    const std::string reason = report_.halted_at ? "upstream stage failed: " + *report_.halted_at
                                                 : "not reached";
    for (ClaimOutcome& c : report_.claims) {
      if (c.status == ClaimStatus::kSkipped && c.detail.empty()) c.detail = reason;
    }
    mark_skipped(report_.group_facts, reason);
    mark_skipped(report_.irreducibility, reason);
    mark_skipped(report_.pairing, reason);
    mark_skipped(report_.induced, reason);
    mark_skipped(report_.derham.basis, reason);
    mark_skipped(report_.derham.action, reason);
    mark_skipped(report_.derham.splitting, reason);
    mark_skipped(report_.derham.indecomposability, reason);
    if (config_.timings) report_.timings_ms = timings_;
    return std::move(report_);
  }

 private:
  template <typename T>
  static void mark_skipped(Section<T>& s, const std::string& reason) {
    if (!s.value && s.skipped.empty()) s.skipped = reason;
  }

  void stage(const std::string& name, const std::function<void()>& body) {
    if (report_.halted_at) return;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    timings_[name] = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    bool failed = !error.empty();
    for (const ClaimInfo& info : claim_registry()) {
      if (info.stage != name) continue;
      ClaimOutcome& c = outcome(info.id);
      if (c.status == ClaimStatus::kFail) failed = true;
      if (c.status == ClaimStatus::kSkipped && !error.empty()) {
        c.status = ClaimStatus::kFail;
        c.detail = "error: " + error;
      }
    }
    if (failed) report_.halted_at = name + (error.empty() ? "" : " (" + error + ")");
  }

  ClaimOutcome& outcome(std::string_view id) {
    for (ClaimOutcome& c : report_.claims) {
      if (c.id == id) return c;
    }
    throw std::out_of_range(std::string(id));
  }

  void claim(std::string_view id, bool pass, std::string detail) {
    ClaimOutcome& c = outcome(id);
    c.status = pass ? ClaimStatus::kPass : ClaimStatus::kFail;
    c.detail = std::move(detail);
  }

  Fq random_scalar() {
    const QuadraticField& field = curve_->field();
    std::uniform_int_distribution<std::int64_t> d(0, curve_->p() - 1);
    const std::int64_t a = d(rng_);
    return field.make(a, d(rng_));
  }

  int random_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  void group_stage() {
    const int p = report_.prime;
    curve_ = std::make_unique<Curve>(p);
    report_.genus = curve_->genus();
    report_.series_order =
        config_.series_order > 0 ? config_.series_order : default_series_order(*curve_);
    group_ = std::make_unique<AutGroup>(*curve_);
    GroupFacts f;
    f.order = group_->order();
    f.expected_order = 2ULL * (p - 1) * p * (p + 1);
    const SubgroupInfo sub = group_->theta_and_subgroup();
    f.index = sub.index;
    f.kernel_size = sub.kernel_size;
    const OrbitInfo orbit = group_->orbit_stabilizer(Place::infinity());
    f.orbit_size = orbit.orbit.size();
    f.stabilizer_order = orbit.stabilizer_order;
    f.substitution_is_right_action = group_->substitution_is_right_action();
    for (const GroupElement& g : group_->generators()) f.generators.push_back(g.to_string());
    report_.group_facts.value = f;

    claim("aut_order", f.order == f.expected_order,
          "|G| = " + std::to_string(f.order) + ", 2(p-1)p(p+1) = " +
              std::to_string(f.expected_order));
    const bool one_mod_four = p % 4 == 1;
    const int want_index = one_mod_four ? 2 : 4;
    const int want_kernel = one_mod_four ? 1 : 2;
    claim("theta_kernel_index", f.index == want_index && f.kernel_size == want_kernel,
          "|G:H| = " + std::to_string(f.index) + " (expected " + std::to_string(want_index) +
              "), |ker theta| = " + std::to_string(f.kernel_size) + " (expected " +
              std::to_string(want_kernel) + ")");
    const std::size_t want_stab = 2ULL * p * (p - 1);
    claim("orbit_infinity", f.orbit_size == static_cast<std::size_t>(p + 1) &&
                                f.stabilizer_order == want_stab,
          "orbit size " + std::to_string(f.orbit_size) + ", stabilizer order " +
              std::to_string(f.stabilizer_order));
  }

  void canonical_stage() {
    const int g = curve_->genus();
    bool ok = true;
    std::string detail = "dim " + std::to_string(g);
    Subspace span(curve_->field_ptr(), g);
    for (int i = 0; i < g; ++i) {
      const Differential w = holomorphic_basis_form(*curve_, i);
      const DivisorInfo info = divisor_and_regularity(w, {});
      int degree = 0;
      for (const auto& [place, n] : info.divisor) degree += n;
      if (!info.complete || !info.regular || degree != 2 * g - 2) {
        ok = false;
        detail = "x^" + std::to_string(i) + " dx / y has divisor " + to_string(info.divisor);
      }
      const auto coords = holomorphic_coordinates(w);
      if (!coords || !span.add(*coords)) {
        ok = false;
        detail = "x^" + std::to_string(i) + " dx / y is not independent";
      }
    }
    claim("HDbasis", ok, detail);
    canonical_ = std::make_unique<MatrixRep>(canonical_rep(*group_));
    const ClosureReport& closure = canonical_->closure();
    if (!closure.homomorphism || closure.reached != group_->order()) {
      throw StageFailed("canonical representation is not a homomorphism on G: " +
                        closure.first_failure);
    }
  }

  void irreducibility_stage() {
    IrreducibilityFacts f;
    f.dimension = canonical_->dim();
    const PhiReport phi = check_phi_equivariance(*group_);
    f.phi_equivariant = phi.pass;
    f.phi_counterexample = phi.counterexample;
    const IrreducibilityResult can = is_absolutely_irreducible(*canonical_, config_.norton_budget);
    const IrreducibilityResult dual =
        is_absolutely_irreducible(contragredient(*canonical_), config_.norton_budget);
    f.canonical = can.absolutely_irreducible;
    f.canonical_end_dim = can.end_dim;
    f.contragredient = dual.absolutely_irreducible;
    f.contragredient_end_dim = dual.end_dim;
    f.h1o_matches_contragredient = check_h1o_geometric(*group_).matches_contragredient;
    report_.irreducibility.value = f;
    claim("irrHom", f.phi_equivariant,
          f.phi_equivariant ? "matrices agree on the generators of H" : f.phi_counterexample);
    claim("irreducible",
          f.canonical && f.contragredient && f.h1o_matches_contragredient,
          "end_dim " + std::to_string(f.canonical_end_dim) + " / " +
              std::to_string(f.contragredient_end_dim) + ", H1(O) matrices " +
              (f.h1o_matches_contragredient ? "equal" : "differ from") +
              " the inverse transposes");
  }

  void pairing_stage() {
    PairingFacts f;
    const QuadraticField& field = curve_->field();
    const Fq res = residue(curve_->x_shift_power(0, -1) * curve_->dx(), Place::infinity());
    f.residue_x_inverse_dx_at_infinity = str(res);
    const Matrix gram = gram_matrix(*curve_);
    const Fq c = gram(0, 0);
    f.gram_constant = str(c);
    f.gram_is_scalar = !c.is_zero() && gram == c * Matrix::identity(curve_->field_ptr(), gram.rows());
    f.dual_basis_scale = c.is_zero() ? "undefined" : str(c.inverse());
    f.printed_scale_matches = !c.is_zero() && c.inverse() == field(-2);

    const int p = report_.prime;
    const std::vector<Place> places = curve_->places();
    for (int s = 0; s < 50; ++s) {
      CurveFunction a = curve_->constant(0);
      CurveFunction b = curve_->constant(0);
      for (int k = 0; k < 3; ++k) {
        a += random_scalar() * curve_->x_shift_power(random_int(0, p - 1), random_int(-3, 3));
        b += random_scalar() * curve_->x_shift_power(random_int(0, p - 1), random_int(-3, 3));
      }
      const Differential w = (a + b * curve_->y()) * curve_->dx();
      Fq total = field.zero();
      for (const Place& q : places) total += residue(w, q);
      ++f.residue_theorem_samples;
      if (!total.is_zero()) ++f.residue_theorem_failures;
    }
    report_.pairing.value = f;
    claim("residue_pairing",
          res == field(-2) && f.gram_is_scalar && f.residue_theorem_failures == 0,
          "res_Pinf(x^-1 dx) = " + f.residue_x_inverse_dx_at_infinity + ", Gram = " +
              f.gram_constant + " I, residue theorem " +
              std::to_string(f.residue_theorem_samples - f.residue_theorem_failures) + "/" +
              std::to_string(f.residue_theorem_samples));
  }

  void induced_stage() {
    InducedFacts f;
    const EmbeddingReport e = check_embedding(*group_);
    f.hom_dim = e.hom_dim;
    for (const GroupElement& r : e.cosets) f.cosets.push_back(r.to_string());
    f.alpha_cosets_tile = e.alpha_cosets_tile;
    f.frobenius_equivariant = e.frobenius_equivariant;
    f.frobenius_injective = e.frobenius_injective;
    f.literal_equivariant = e.literal_equivariant;
    f.literal_injective = e.literal_injective;
    f.literal_equals_frobenius = e.literal_equals_frobenius;
    report_.induced.value = f;
    claim("induced_embedding", f.hom_dim == 1 && f.frobenius_equivariant && f.frobenius_injective,
          "dim Hom = " + std::to_string(f.hom_dim) + ", embedding " +
              (f.frobenius_equivariant && f.frobenius_injective ? "equivariant and injective"
                                                                : "fails"));
  }

  void basis_stage() {
    DeRhamBasisFacts f;
    const int g = curve_->genus();
    const QuadraticField* field = curve_->field_ptr();
    try {
      derham_ = std::make_unique<DeRham>(*group_);
      f.basis_valid = true;
    } catch (const ValidationFailure& e) {
      f.failures.push_back(e.what());
    }
    if (f.basis_valid) {
      const DeRhamBasis& basis = derham_->basis();
      std::vector<HyperCocycle> classes = basis.tau;
      classes.insert(classes.end(), basis.eta.begin(), basis.eta.end());
      f.left_inverse = true;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        if (!(derham_->class_to_coordinates(classes[k]) ==
              unit_vector(field, 2 * g, static_cast<int>(k)))) {
          f.left_inverse = false;
          f.failures.push_back("coordinates of basis class " + std::to_string(k));
        }
      }
      for (int s = 0; s < 5; ++s) {
        Vec coeffs;
        HyperCocycle sum = field->zero() * classes.front();
        for (const HyperCocycle& c : classes) {
          coeffs.push_back(random_scalar());
          sum = sum + coeffs.back() * c;
        }
        if (!(derham_->class_to_coordinates(sum) == coeffs)) {
          f.left_inverse = false;
          f.failures.push_back("coordinates of a random combination");
        }
      }
      f.coboundaries_vanish = true;
      const Vec zero(static_cast<std::size_t>(2 * g), field->zero());
      for (int s = 0; s < 20; ++s) {
        CurveFunction f1 = curve_->constant(0);
        CurveFunction f2 = curve_->constant(0);
        for (int k = 0; k < 3; ++k) {
          f1 += random_scalar() * curve_->x_shift_power(0, -random_int(1, g + 2));
          f1 += random_scalar() * (curve_->y() * curve_->x_shift_power(0, -random_int(g + 1, g + 3)));
          f2 += random_scalar() * curve_->x_shift_power(0, random_int(0, 3));
          f2 += random_scalar() * (curve_->y() * curve_->x_shift_power(0, random_int(0, 3)));
        }
        ++f.coboundary_samples;
        if (!(derham_->class_to_coordinates(coboundary(Cover::standard(), f1, f2)) == zero)) {
          f.coboundaries_vanish = false;
        }
      }
    }
    f.nu_valid = true;
    f.nu_projects_to_eta = true;
    f.nu_sum_closed_form = true;
    f.nu_literal_sign_valid = true;
    f.nu_f13_min_valuation_at_infinity = report_.series_order;
    for (int i = 1; i <= g; ++i) {
      const NuDiagnostics d = nu_diagnostics(*curve_, i, report_.series_order);
      f.nu_valid = f.nu_valid && d.valid;
      f.nu_projects_to_eta = f.nu_projects_to_eta && d.projects_to_eta;
      f.nu_sum_closed_form = f.nu_sum_closed_form && d.sum_equals_closed_form;
      f.nu_f13_min_valuation_at_infinity =
          std::min(f.nu_f13_min_valuation_at_infinity, d.f13_valuation_at_infinity);
      if (!d.literal_sign_valid && f.nu_literal_sign_valid) {
        f.nu_literal_sign_valid = false;
        f.nu_literal_sign_failure = "nu_" + std::to_string(i) + ": " + d.literal_sign_failure;
      }
    }
    report_.derham.basis.value = f;
    claim("basisdR", f.basis_valid && f.left_inverse && f.coboundaries_vanish,
          f.basis_valid ? "coordinates invert the basis; " +
                              std::to_string(f.coboundary_samples) + " coboundaries " +
                              (f.coboundaries_vanish ? "vanish" : "do not all vanish")
                        : join(f.failures, "; "));
    claim("nubasisHdR",
          f.nu_valid && f.nu_projects_to_eta && f.nu_f13_min_valuation_at_infinity >= 1,
          std::string(f.nu_valid ? "valid" : "invalid") + ", min v_Pinf(f_13) = " +
              std::to_string(f.nu_f13_min_valuation_at_infinity));
  }

  void action_stage() {
    if (!derham_) throw StageFailed("no de Rham basis");
    ActionFacts f;
    rep_ = std::make_unique<MatrixRep>(derham_->assemble_rep());
    const ClosureReport& closure = rep_->closure();
    f.homomorphism = closure.homomorphism;
    f.reached = closure.reached;
    const int p = report_.prime;
    const int g = curve_->genus();
    f.sigma_order_p = (*rep_)(group_->sigma()).pow(p).is_identity();
    f.torus_eigenvalues = true;
    for (int t = 1; t < p; ++t) {
      const Matrix m = rep_from_substitution(*group_, (*rep_)(group_->torus(static_cast<std::uint32_t>(t))));
      const Fq tt = curve_->scalar(t);
      Matrix want(curve_->field_ptr(), 2 * g, 2 * g);
      for (int i = 0; i < g; ++i) want(i, i) = tt.pow(2 * i + 1);
      for (int j = 1; j <= g; ++j) want(g + j - 1, g + j - 1) = tt.pow(1 - 2 * j);
      if (!(m == want)) f.torus_eigenvalues = false;
    }
    const SigmaCrossCheck sc = check_sigma_expansion(*derham_);
    f.sigma_crosscheck.match = sc.printed_expansion_matches;
    f.sigma_crosscheck.diffs = sc.diffs;
    f.sigma_crosscheck.cocycle_identity_holds = sc.cocycle_identity_holds;
    f.sigma_crosscheck.routes_agree = sc.routes_agree;
    const RewritingCheck rw = check_rewriting(*derham_);
    f.rewriting.match = rw.matches_printed;
    f.rewriting.pure_tau = rw.pure_tau;
    for (const Fq& m : rw.measured) f.rewriting.measured.push_back(str(m));
    report_.derham.action.value = f;
    if (!f.homomorphism || f.reached != group_->order()) {
      throw StageFailed("H1_dR matrices are not a representation of G: " +
                        closure.first_failure);
    }
    if (!f.sigma_order_p) throw StageFailed("rho(sigma)^p != I");
    if (!f.torus_eigenvalues) throw StageFailed("torus eigenvalues differ from t^(2i+1), t^(1-2j)");
    if (!sc.cocycle_identity_holds || !sc.routes_agree) {
      throw StageFailed("sigma action: lifted and direct computations disagree");
    }
  }

  void splitting_stage() {
    SplittingFacts f;
    const SplittingCertificate cert = splitting_certificate(*rep_);
    const SplittingCertificate control = splitting_certificate(block_diagonal_control(*rep_));
    f.splits = cert.splits;
    f.section_exists = cert.section_exists;
    f.eigenspaces_as_expected = cert.eigenspaces_as_expected;
    f.eigen_system_feasible = cert.eigen_system_feasible;
    f.routes_agree = cert.routes_agree;
    f.control_splits = control.section_exists && control.eigen_system_feasible;
    report_.derham.splitting.value = f;
    claim("nosplit",
          !f.section_exists && !f.eigen_system_feasible && f.routes_agree &&
              f.eigenspaces_as_expected && f.control_splits,
          std::string("section system ") + (f.section_exists ? "feasible" : "infeasible") +
              ", eigenspace system " + (f.eigen_system_feasible ? "feasible" : "infeasible") +
              ", control " + (f.control_splits ? "splits" : "does not split"));
  }

  void indecomposability_stage() {
    IndecomposabilityFacts f;
    const IndecomposabilityCertificate cert =
        indecomposability_certificate(*rep_, config_.norton_budget);
    f.indecomposable = cert.indecomposable;
    f.nonprojective = cert.nonprojective;
    f.end_dim = cert.end_dim;
    f.sub_absolutely_irreducible = cert.sub_absolutely_irreducible;
    f.quotient_absolutely_irreducible = cert.quotient_absolutely_irreducible;
    report_.derham.indecomposability.value = f;
    claim("indecomposable", f.indecomposable && f.nonprojective,
          std::string(f.indecomposable ? "indecomposable" : "decomposable") + ", " +
              (f.nonprojective ? "p does not divide 2g" : "p divides 2g") + ", end_dim " +
              std::to_string(f.end_dim));
  }

  const SuiteConfig& config_;
  std::mt19937_64 rng_;
  CertificationReport report_;
  std::map<std::string, double> timings_;
  std::unique_ptr<Curve> curve_;
  std::unique_ptr<AutGroup> group_;
  std::unique_ptr<MatrixRep> canonical_;
  std::unique_ptr<DeRham> derham_;
  std::unique_ptr<MatrixRep> rep_;
};

}  // namespace

void validate_primes(const std::vector<int>& primes) {
  if (primes.empty()) throw std::invalid_argument("no primes given");
  for (int p : primes) {
    if (p <= 2 || !is_prime(p)) {
      throw std::invalid_argument("not an odd prime: " + std::to_string(p));
    }
    if (p > kMaxPrime) {
      throw std::invalid_argument("prime " + std::to_string(p) + " exceeds the supported bound " +
                                  std::to_string(kMaxPrime));
    }
  }
}

CertificationReport certify_prime(int p, const SuiteConfig& config) {
  validate_primes({p});
  return PrimeRun(p, config).run();
}

std::vector<CertificationReport> run_suite(const std::vector<int>& primes,
                                           const SuiteConfig& config) {
  validate_primes(primes);
  std::vector<CertificationReport> reports(primes.size());
  int workers = config.workers > 0 ? config.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, static_cast<int>(primes.size()));
  // Largest primes first so the slowest jobs start early.
  std::vector<std::size_t> order(primes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return primes[a] > primes[b]; });
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < order.size(); k = next++) {
      const std::size_t slot = order[k];
      reports[slot] = PrimeRun(primes[slot], config).run();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return reports;
}

namespace {

using Json = nlohmann::ordered_json;

template <typename T, typename F>
Json section_json(const Section<T>& s, F&& to_json) {
  if (s.value) return to_json(*s.value);
  return Json{{"skipped", s.skipped}};
}

Json report_json(const CertificationReport& r) {
  Json j;
  j["prime"] = r.prime;
  j["genus"] = r.genus;
  j["config"] = {{"series_order", r.series_order}, {"norton_budget", r.norton_budget}};
  j["group_facts"] = section_json(r.group_facts, [](const GroupFacts& f) {
    return Json{{"order", f.order},
                {"expected_order", f.expected_order},
                {"index", f.index},
                {"kernel_size", f.kernel_size},
                {"orbit_size", f.orbit_size},
                {"stabilizer_order", f.stabilizer_order},
                {"substitution_is_right_action", f.substitution_is_right_action},
                {"generators", f.generators}};
  });
  j["irreducibility"] = section_json(r.irreducibility, [](const IrreducibilityFacts& f) {
    return Json{{"dimension", f.dimension},
                {"canonical", f.canonical},
                {"contragredient", f.contragredient},
                {"end_dims", {{"canonical", f.canonical_end_dim},
                              {"contragredient", f.contragredient_end_dim}}},
                {"phi_equivariant", f.phi_equivariant},
                {"h1o_matches_contragredient", f.h1o_matches_contragredient}};
  });
  j["pairing"] = section_json(r.pairing, [](const PairingFacts& f) {
    return Json{{"residue_x_inverse_dx_at_infinity", f.residue_x_inverse_dx_at_infinity},
                {"gram_constant", f.gram_constant},
                {"gram_is_scalar", f.gram_is_scalar},
                {"dual_basis_scale", f.dual_basis_scale},
                {"printed_scale_matches", f.printed_scale_matches},
                {"residue_theorem", {{"samples", f.residue_theorem_samples},
                                     {"failures", f.residue_theorem_failures}}}};
  });
  j["induced"] = section_json(r.induced, [](const InducedFacts& f) {
    return Json{{"hom_dim", f.hom_dim},
                {"cosets", f.cosets},
                {"alpha_cosets_tile", f.alpha_cosets_tile},
                {"frobenius_equivariant", f.frobenius_equivariant},
                {"frobenius_injective", f.frobenius_injective},
                {"literal_map", {{"equivariant", f.literal_equivariant},
                                 {"injective", f.literal_injective},
                                 {"equals_frobenius", f.literal_equals_frobenius}}}};
  });
  Json dr;
  dr["basis"] = section_json(r.derham.basis, [](const DeRhamBasisFacts& f) {
    return Json{{"basis_valid", f.basis_valid},
                {"failures", f.failures},
                {"left_inverse", f.left_inverse},
                {"coboundaries", {{"samples", f.coboundary_samples},
                                  {"vanish", f.coboundaries_vanish}}},
                {"nu", {{"valid", f.nu_valid},
                        {"projects_to_eta", f.nu_projects_to_eta},
                        {"f13_min_valuation_at_infinity", f.nu_f13_min_valuation_at_infinity},
                        {"sum_closed_form", f.nu_sum_closed_form},
                        {"literal_sign_valid", f.nu_literal_sign_valid},
                        {"literal_sign_failure", f.nu_literal_sign_failure}}}};
  });
  dr["action"] = section_json(r.derham.action, [](const ActionFacts& f) {
    return Json{{"homomorphism", f.homomorphism},
                {"reached", f.reached},
                {"sigma_order_p", f.sigma_order_p},
                {"torus_eigenvalues", f.torus_eigenvalues},
                {"sigma_crosscheck", {{"match", f.sigma_crosscheck.match},
                                      {"diffs", f.sigma_crosscheck.diffs},
                                      {"cocycle_identity_holds",
                                       f.sigma_crosscheck.cocycle_identity_holds},
                                      {"routes_agree", f.sigma_crosscheck.routes_agree}}},
                {"rewriting", {{"match", f.rewriting.match},
                               {"pure_tau", f.rewriting.pure_tau},
                               {"measured", f.rewriting.measured}}}};
  });
  dr["splitting"] = section_json(r.derham.splitting, [](const SplittingFacts& f) {
    return Json{{"splits", f.splits},
                {"section_exists", f.section_exists},
                {"eigenspaces_as_expected", f.eigenspaces_as_expected},
                {"eigen_system_feasible", f.eigen_system_feasible},
                {"routes_agree", f.routes_agree},
                {"control_splits", f.control_splits}};
  });
  dr["indecomposability"] =
      section_json(r.derham.indecomposability, [](const IndecomposabilityFacts& f) {
        return Json{{"indecomposable", f.indecomposable},
                    {"nonprojective", f.nonprojective},
                    {"end_dim", f.end_dim},
                    {"sub_absolutely_irreducible", f.sub_absolutely_irreducible},
                    {"quotient_absolutely_irreducible", f.quotient_absolutely_irreducible}};
      });
  j["derham"] = dr;
  Json claims = Json::array();
  for (const ClaimOutcome& c : r.claims) {
    claims.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  j["claims"] = claims;
  j["halted_at"] = r.halted_at ? Json(*r.halted_at) : Json(nullptr);
  if (r.timings_ms) {
    j["timings"] = *r.timings_ms;
  } else {
    j["timings"] = {{"skipped", "timings disabled"}};
  }
  j["suite_version"] = r.suite_version;
  return j;
}

std::string yes_no(bool b) { return b ? "match" : "mismatch"; }

void text_report(std::ostream& os, const CertificationReport& r) {
  os << "p = " << r.prime << " (genus " << r.genus << ")\n";
  std::size_t width = 0;
  for (const ClaimOutcome& c : r.claims) width = std::max(width, c.id.size());
  for (const ClaimOutcome& c : r.claims) {
    os << "  " << std::left << std::setw(static_cast<int>(width) + 2) << c.id << std::setw(9)
       << to_string(c.status) << c.detail << "\n";
  }
  os << "  cross-checks (informational)\n";
  if (r.pairing.value) {
    os << "    dual_basis_scale   " << r.pairing.value->dual_basis_scale << ", -2 y x^-j "
       << yes_no(r.pairing.value->printed_scale_matches) << "\n";
  }
  if (r.induced.value) {
    const InducedFacts& f = *r.induced.value;
    os << "    alpha_cosets       " << (f.alpha_cosets_tile ? "tile G" : "do not tile G")
       << "; explicit block map " << (f.literal_equivariant ? "equivariant" : "not equivariant")
       << "\n";
  }
  if (r.derham.basis.value) {
    const DeRhamBasisFacts& f = *r.derham.basis.value;
    os << "    nu_literal_sign    " << (f.nu_literal_sign_valid ? "valid" : "invalid");
    if (!f.nu_literal_sign_valid) os << " (" << f.nu_literal_sign_failure << ")";
    os << "\n";
  }
  if (r.derham.action.value) {
    const ActionFacts& f = *r.derham.action.value;
    os << "    sigma_expansion    " << yes_no(f.sigma_crosscheck.match) << "\n";
    for (const std::string& d : f.sigma_crosscheck.diffs) os << "      " << d << "\n";
    os << "    rewriting          " << yes_no(f.rewriting.match) << ", measured ["
       << join(f.rewriting.measured, " ") << "]\n";
  }
  if (r.derham.indecomposability.value) {
    os << "    end_dim(H1_dR)     " << r.derham.indecomposability.value->end_dim << "\n";
  }
  if (r.halted_at) os << "  halted at: " << *r.halted_at << "\n";
  if (r.timings_ms) {
    os << "  timings (ms)\n";
    for (const auto& [stage, ms] : *r.timings_ms) {
      os << "    " << std::left << std::setw(19) << stage << std::fixed << std::setprecision(1)
         << ms << "\n";
    }
  }
}

}  // namespace

std::string emit_report(const std::vector<CertificationReport>& reports, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    Json j;
    j["suite_version"] = std::string(kSuiteVersion);
    j["all_pass"] = all_pass(reports);
    Json arr = Json::array();
    for (const CertificationReport& r : reports) arr.push_back(report_json(r));
    j["reports"] = arr;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "canonrep certification suite " << kSuiteVersion << "\n";
  for (const CertificationReport& r : reports) {
    os << "\n";
    text_report(os, r);
  }
  os << "\n" << (all_pass(reports) ? "ALL CERTIFICATES PASS" : "SOME CERTIFICATES FAILED")
     << "\n";
  return os.str();
}

void write_report(const std::vector<CertificationReport>& reports, ReportFormat format,
                  const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOFailure("cannot open " + path + " for writing");
  out << emit_report(reports, format);
  out.flush();
  if (!out) throw IOFailure("failed writing " + path);
}

}  // namespace canonrep

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canonrep {

inline constexpr std::string_view kSuiteVersion = "1.0.0";
// Largest prime run_suite accepts; |G| = 2(p-1)p(p+1) grows quickly.
inline constexpr int kMaxPrime = 31;

class IOFailure : public std::runtime_error {
 public:
  explicit IOFailure(const std::string& what) : std::runtime_error(what) {}
};

struct SuiteConfig {
  // 0 selects 4p + 4.
  int series_order = 0;
  int norton_budget = 64;
  // Seeds the sampled checks (random differentials, coboundaries, combinations).
  std::uint64_t rng_seed = 20240229;
  // Wall-clock stage timings make reports non-reproducible, so they are opt-in.
  bool timings = false;
  // 0 uses std::thread::hardware_concurrency().
  int workers = 0;
};

enum class ClaimStatus { kPass, kFail, kSkipped };
std::string_view to_string(ClaimStatus s);

struct ClaimInfo {
  std::string_view id;
  std::string_view stage;
  std::string_view statement;
  std::string_view check;
};
// Static registry, in report order. Every report lists each claim once.
const std::vector<ClaimInfo>& claim_registry();
// Throws std::out_of_range for unknown ids.
const ClaimInfo& claim_info(std::string_view id);
// Statement and check performed, as printed by `canonrep explain`.
std::string explain(std::string_view id);

// A report section that is either computed or skipped with a reason.
template <typename T>
struct Section {
  std::optional<T> value;
  std::string skipped;
};

struct GroupFacts {
  std::size_t order = 0;
  std::size_t expected_order = 0;
  int index = 0;
  int kernel_size = 0;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
  bool substitution_is_right_action = false;
  std::vector<std::string> generators;
};

struct IrreducibilityFacts {
  int dimension = 0;
  bool canonical = false;
  bool contragredient = false;
  int canonical_end_dim = 0;
  int contragredient_end_dim = 0;
  bool phi_equivariant = false;
  std::string phi_counterexample;
  bool h1o_matches_contragredient = false;
};

struct PairingFacts {
  std::string residue_x_inverse_dx_at_infinity;
  std::string gram_constant;
  bool gram_is_scalar = false;
  // Scale s with {s y x^-j} dual to {x^(j-1) dx / y}: the inverse of the Gram constant.
  std::string dual_basis_scale;
  // Whether -2 y x^-j is the dual basis (informational).
  bool printed_scale_matches = false;
  int residue_theorem_samples = 0;
  int residue_theorem_failures = 0;
};

struct InducedFacts {
  int hom_dim = 0;
  std::vector<std::string> cosets;
  bool alpha_cosets_tile = false;
  bool frobenius_equivariant = false;
  bool frobenius_injective = false;
  // The explicit two- or four-block map (informational).
  bool literal_equivariant = false;
  bool literal_injective = false;
  bool literal_equals_frobenius = false;
};

struct DeRhamBasisFacts {
  bool basis_valid = false;
  std::vector<std::string> failures;
  bool left_inverse = false;
  int coboundary_samples = 0;
  bool coboundaries_vanish = false;
  bool nu_valid = false;
  bool nu_projects_to_eta = false;
  int nu_f13_min_valuation_at_infinity = 0;
  // The overlap sum equals y (x^(p-i) - 1) / (x - 1)^p for every i.
  bool nu_sum_closed_form = false;
  // Informational: the overlap function with the opposite sign.
  bool nu_literal_sign_valid = false;
  std::string nu_literal_sign_failure;
};

struct SigmaCrosscheck {
  bool match = false;
  std::vector<std::string> diffs;
  bool cocycle_identity_holds = false;
  bool routes_agree = false;
};

struct RewritingFacts {
  // [eta~_(p-j)] == -2j tau_(j-1) for all j (informational).
  bool match = false;
  bool pure_tau = false;
  std::vector<std::string> measured;
};

struct ActionFacts {
  bool homomorphism = false;
  std::size_t reached = 0;
  bool sigma_order_p = false;
  bool torus_eigenvalues = false;
  SigmaCrosscheck sigma_crosscheck;
  RewritingFacts rewriting;
};

struct SplittingFacts {
  bool splits = true;
  bool section_exists = true;
  bool eigenspaces_as_expected = false;
  bool eigen_system_feasible = true;
  bool routes_agree = false;
  bool control_splits = false;
};

struct IndecomposabilityFacts {
  bool indecomposable = false;
  bool nonprojective = false;
  int end_dim = 0;
  bool sub_absolutely_irreducible = false;
  bool quotient_absolutely_irreducible = false;
};

struct DeRhamFacts {
  Section<DeRhamBasisFacts> basis;
  Section<ActionFacts> action;
  Section<SplittingFacts> splitting;
  Section<IndecomposabilityFacts> indecomposability;
};

struct ClaimOutcome {
  std::string id;
  ClaimStatus status = ClaimStatus::kSkipped;
  std::string detail;
};

struct CertificationReport {
  int prime = 0;
  int genus = 0;
  int series_order = 0;
  int norton_budget = 0;
  Section<GroupFacts> group_facts;
  Section<IrreducibilityFacts> irreducibility;
  Section<PairingFacts> pairing;
  Section<InducedFacts> induced;
  DeRhamFacts derham;
  std::vector<ClaimOutcome> claims;
  // Stage that stopped the run, with the reason.
  std::optional<std::string> halted_at;
  std::optional<std::map<std::string, double>> timings_ms;
  std::string suite_version{kSuiteVersion};

  bool all_pass() const;
  const ClaimOutcome& claim(std::string_view id) const;
};

// Throws std::invalid_argument for anything but odd primes 3 <= p <= kMaxPrime.
void validate_primes(const std::vector<int>& primes);
CertificationReport certify_prime(int p, const SuiteConfig& config);
// One report per prime, in input order; primes run in parallel.
std::vector<CertificationReport> run_suite(const std::vector<int>& primes,
                                           const SuiteConfig& config);

enum class ReportFormat { kJson, kText };
std::string emit_report(const std::vector<CertificationReport>& reports, ReportFormat format);
// Throws IOFailure.
void write_report(const std::vector<CertificationReport>& reports, ReportFormat format,
                  const std::string& path);
bool all_pass(const std::vector<CertificationReport>& reports);

}  // namespace canonrep

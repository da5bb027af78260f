// Runs the acceptance criteria over p = 3, 5, 7, 11, 13 and prints one
// verdict line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "canonrep/curve.hpp"
#include "canonrep/laurent.hpp"
#include "canonrep/verify.hpp"

namespace {

using canonrep::CertificationReport;

const std::vector<int> kPrimes = {3, 5, 7, 11, 13};

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double stage_ms(const CertificationReport& r, const std::string& stage) {
  if (!r.timings_ms) return 0;
  const auto it = r.timings_ms->find(stage);
  return it == r.timings_ms->end() ? 0 : it->second;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

Verdict group_facts(const std::vector<CertificationReport>& reports) {
  Verdict v;
  for (const auto& r : reports) {
    const std::string tag = "p=" + std::to_string(r.prime);
    if (!r.group_facts.value) {
      v.require(false, tag + " group section missing");
      continue;
    }
    const auto& g = *r.group_facts.value;
    const std::size_t p = static_cast<std::size_t>(r.prime);
    v.require(g.order == 2 * (p - 1) * p * (p + 1), tag + " |G| = " + std::to_string(g.order));
    v.require(g.index == (p % 4 == 1 ? 2 : 4), tag + " index " + std::to_string(g.index));
    v.require(g.kernel_size == (p % 4 == 1 ? 1 : 2), tag + " kernel " + std::to_string(g.kernel_size));
    v.require(g.orbit_size == p + 1, tag + " orbit " + std::to_string(g.orbit_size));
    v.require(g.stabilizer_order == 2 * p * (p - 1),
              tag + " stabilizer " + std::to_string(g.stabilizer_order));
    v.require(stage_ms(r, "group") < 10000, tag + " group stage over 10 s");
    if (p == 7) v.note("|G| = " + std::to_string(g.order) + " at p=7");
  }
  return v;
}

Verdict residue_pairing(const std::vector<CertificationReport>& reports) {
  Verdict v;
  for (const auto& r : reports) {
    const std::string tag = "p=" + std::to_string(r.prime);
    canonrep::Curve curve(r.prime);
    const canonrep::Differential w = curve.x_shift_power(0, -1) * curve.dx();
    v.require(canonrep::residue(w, canonrep::Place::infinity()) == curve.scalar(-2),
              tag + " res_Pinf(x^-1 dx) != -2");
    const canonrep::Matrix gram = canonrep::gram_matrix(curve);
    v.require(gram == gram(0, 0) * canonrep::Matrix::identity(curve.field_ptr(), curve.genus()),
              tag + " Gram matrix not scalar");
    if (!r.pairing.value) {
      v.require(false, tag + " pairing section missing");
      continue;
    }
    const auto& f = *r.pairing.value;
    v.require(f.residue_theorem_samples == 50 && f.residue_theorem_failures == 0,
              tag + " residue theorem " + std::to_string(f.residue_theorem_failures) + "/" +
                  std::to_string(f.residue_theorem_samples) + " failures");
    v.require(stage_ms(r, "pairing") < 30000, tag + " pairing stage over 30 s");
    v.note(tag + " c=" + f.gram_constant);
  }
  return v;
}

Verdict canonical_rep(const std::vector<CertificationReport>& reports) {
  Verdict v;
  for (const auto& r : reports) {
    const std::string tag = "p=" + std::to_string(r.prime);
    if (!r.irreducibility.value) {
      v.require(false, tag + " irreducibility section missing");
      continue;
    }
    const auto& f = *r.irreducibility.value;
    v.require(f.canonical && f.canonical_end_dim == 1, tag + " not absolutely irreducible");
    v.require(f.phi_equivariant, tag + " phi not equivariant: " + f.phi_counterexample);
    v.require(f.h1o_matches_contragredient, tag + " H1(O) is not the inverse transpose");
    v.require(stage_ms(r, "canonical_rep") + stage_ms(r, "irreducibility") < 60000,
              tag + " over 60 s");
  }
  return v;
}

Verdict induced(const std::vector<CertificationReport>& reports) {
  Verdict v;
  for (const auto& r : reports) {
    const std::string tag = "p=" + std::to_string(r.prime);
    if (!r.induced.value) {
      v.require(false, tag + " induced section missing");
      continue;
    }
    const auto& f = *r.induced.value;
    const std::string map = r.prime % 4 == 1 ? "2-block" : "4-block";
    v.require(f.hom_dim == 1, tag + " dim Hom = " + std::to_string(f.hom_dim));
    v.require(f.literal_equivariant, tag + " " + map + " map not equivariant");
    v.require(f.literal_injective, tag + " " + map + " map not injective");
    if (!f.alpha_cosets_tile) v.note(tag + " powers of alpha do not tile G");
    v.note(tag + " Frobenius-reciprocity map " +
           (f.frobenius_equivariant && f.frobenius_injective ? "ok" : "broken"));
  }
  return v;
}

Verdict derham_basis(const std::vector<CertificationReport>& reports) {
  Verdict v;
  for (const auto& r : reports) {
    const std::string tag = "p=" + std::to_string(r.prime);
    if (!r.derham.basis.value || !r.derham.action.value) {
      v.require(false, tag + " de Rham sections missing");
      continue;
    }
    const auto& b = *r.derham.basis.value;
    const auto& a = *r.derham.action.value;
    v.require(b.basis_valid, tag + " basis invalid: " + join(b.failures));
    v.require(b.nu_valid, tag + " nu invalid");
    v.require(b.left_inverse, tag + " coordinates are not a left inverse");
    v.require(b.coboundary_samples == 20 && b.coboundaries_vanish, tag + " coboundaries");
    v.require(a.sigma_order_p, tag + " rho(sigma)^p != I");
    v.require(a.torus_eigenvalues, tag + " torus eigenvalues");
  }
  return v;
}

Verdict nonsplitting(const std::vector<CertificationReport>& reports) {
  Verdict v;
  for (const auto& r : reports) {
    const std::string tag = "p=" + std::to_string(r.prime);
    if (!r.derham.splitting.value) {
      v.require(false, tag + " splitting section missing");
      continue;
    }
    const auto& s = *r.derham.splitting.value;
    v.require(!s.section_exists, tag + " section system feasible");
    v.require(!s.eigen_system_feasible, tag + " eigenspace system feasible");
    v.require(s.routes_agree, tag + " routes disagree");
    v.require(s.control_splits, tag + " control does not split");
  }
  return v;
}

Verdict indecomposable(const std::vector<CertificationReport>& reports) {
  Verdict v;
  std::string dims;
  for (const auto& r : reports) {
    const std::string tag = "p=" + std::to_string(r.prime);
    if (!r.derham.indecomposability.value) {
      v.require(false, tag + " indecomposability section missing");
      continue;
    }
    const auto& f = *r.derham.indecomposability.value;
    v.require(f.indecomposable, tag + " not indecomposable");
    v.require(f.nonprojective, tag + " projectivity check");
    v.require((r.prime - 1) % r.prime != 0, tag + " p divides p-1");
    dims += (dims.empty() ? "" : " ") + tag + ":" + std::to_string(f.end_dim);
  }
  v.note("end_dim(H1_dR) " + dims);
  return v;
}

Verdict crosschecks(const std::vector<CertificationReport>& reports) {
  Verdict v;
  for (const auto& r : reports) {
    const std::string tag = "p=" + std::to_string(r.prime);
    if (!r.derham.action.value) {
      v.require(false, tag + " action section missing");
      continue;
    }
    const auto& a = *r.derham.action.value;
    v.require(a.rewriting.match,
              tag + " rewriting to -2j tau_(j-1): measured [" + join(a.rewriting.measured) + "]");
    v.note(tag + " sigma expansion " + (a.sigma_crosscheck.match ? "match" : "mismatch"));
  }
  return v;
}

Verdict suite_runtime(double seconds, bool deterministic) {
  Verdict v;
  std::ostringstream os;
  os.precision(3);
  os << "suite " << seconds << " s";
  v.note(os.str());
  v.require(seconds <= 600, "runtime over 10 minutes");
  v.require(deterministic, "reports differ between runs");
  return v;
}

}  // namespace

int main() {
  canonrep::SuiteConfig timed;
  timed.timings = true;
  const auto start = std::chrono::steady_clock::now();
  const auto reports = canonrep::run_suite(kPrimes, timed);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  canonrep::SuiteConfig serial;
  serial.workers = 1;
  canonrep::SuiteConfig parallel;
  const std::string first =
      canonrep::emit_report(canonrep::run_suite(kPrimes, parallel), canonrep::ReportFormat::kJson);
  const std::string second =
      canonrep::emit_report(canonrep::run_suite(kPrimes, serial), canonrep::ReportFormat::kJson);

  const std::vector<std::pair<std::string, Verdict>> verdicts = {
      {"group facts", group_facts(reports)},
      {"residue pairing", residue_pairing(reports)},
      {"canonical representation", canonical_rep(reports)},
      {"induced representation", induced(reports)},
      {"de Rham basis and action", derham_basis(reports)},
      {"non-splitting", nonsplitting(reports)},
      {"indecomposability", indecomposable(reports)},
      {"cross-checks", crosschecks(reports)},
      {"runtime and determinism", suite_runtime(seconds, first == second)},
  };

  int failed = 0;
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    const auto& [name, v] = verdicts[k];
    std::printf("criterion %zu: %s  %s\n", k + 1, v.pass ? "PASS" : "FAIL", name.c_str());
    for (const auto& n : v.notes) std::printf("    %s\n", n.c_str());
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(verdicts.size()) - failed,
              verdicts.size());
  return failed == 0 ? 0 : 1;
}

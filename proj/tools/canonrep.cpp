#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "canonrep/verify.hpp"

namespace {

constexpr int kExitCertificateFailed = 1;
constexpr int kExitUsage = 2;

std::string default_output_path(canonrep::ReportFormat format) {
  const char* dir = std::getenv("CANONREP_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return "";
  const char* name = format == canonrep::ReportFormat::kJson ? "certification_report.json"
                                                              : "certification_report.txt";
  return (std::filesystem::path(dir) / name).string();
}

int run_verify(const std::vector<int>& primes, const canonrep::SuiteConfig& config,
               canonrep::ReportFormat format, std::string out) {
  std::vector<canonrep::CertificationReport> reports;
  try {
    reports = canonrep::run_suite(primes, config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "canonrep: " << e.what() << "\n";
    return kExitUsage;
  }
  if (out.empty()) out = default_output_path(format);
  if (out.empty()) {
    std::cout << canonrep::emit_report(reports, format);
  } else {
    try {
      const std::filesystem::path parent = std::filesystem::path(out).parent_path();
      if (!parent.empty()) std::filesystem::create_directories(parent);
      canonrep::write_report(reports, format, out);
    } catch (const std::exception& e) {
      std::cerr << "canonrep: " << e.what() << "\n";
      return kExitUsage;
    }
    for (const canonrep::CertificationReport& r : reports) {
      std::cerr << "p = " << r.prime << ": " << (r.all_pass() ? "pass" : "FAIL") << "\n";
    }
    std::cerr << "report written to " << out << "\n";
  }
  return canonrep::all_pass(reports) ? 0 : kExitCertificateFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify the automorphism group and cohomology claims for y^2 = x^p - x"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(canonrep::kSuiteVersion));

  CLI::App* verify = app.add_subcommand("verify", "Run the certification suite");
  std::vector<int> primes{3, 5, 7, 11, 13};
  canonrep::SuiteConfig config;
  canonrep::ReportFormat format = canonrep::ReportFormat::kJson;
  std::string out;
  verify->add_option("--primes", primes, "Comma separated odd primes")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--series-order", config.series_order,
                     "Laurent truncation order (0 selects 4p + 4)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--norton-budget", config.norton_budget,
                     "Algebra elements tried by the irreducibility test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", config.rng_seed, "Seed for the sampled checks")
      ->capture_default_str();
  verify->add_option("--workers", config.workers, "Worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--timings", config.timings, "Include per-stage wall-clock timings");
  const std::map<std::string, canonrep::ReportFormat> formats{
      {"json", canonrep::ReportFormat::kJson}, {"text", canonrep::ReportFormat::kText}};
  verify->add_option("--format", format, "Report format: json or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  verify->add_option("--out", out,
                     "Output file; defaults to $CANONREP_OUT_DIR/certification_report.* "
                     "or stdout");

  CLI::App* explain = app.add_subcommand("explain", "Describe a claim and the check performed");
  std::string claim_id;
  explain->add_option("claim-id", claim_id, "Claim identifier")->required();

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) return run_verify(primes, config, format, out);

  try {
    std::cout << canonrep::explain(claim_id);
  } catch (const std::out_of_range& e) {
    std::cerr << "canonrep: " << e.what() << "\nknown claims:";
    for (const canonrep::ClaimInfo& c : canonrep::claim_registry()) std::cerr << " " << c.id;
    std::cerr << "\n";
    return kExitUsage;
  }
  return 0;
}

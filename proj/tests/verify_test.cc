#include "canonrep/verify.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace canonrep {
namespace {

SuiteConfig config() {
  SuiteConfig c;
  c.workers = 2;
  return c;
}

TEST(RegistryTest, TwelveDistinctClaims) {
  const auto& registry = claim_registry();
  EXPECT_EQ(registry.size(), 12u);
  std::set<std::string_view> ids;
  for (const ClaimInfo& c : registry) {
    ids.insert(c.id);
    EXPECT_FALSE(c.statement.empty());
    EXPECT_FALSE(c.check.empty());
    EXPECT_EQ(&claim_info(c.id), &c);
  }
  EXPECT_EQ(ids.size(), registry.size());
  EXPECT_TRUE(ids.contains("nosplit"));
  EXPECT_TRUE(ids.contains("nubasisHdR"));
  EXPECT_THROW(claim_info("no_such_claim"), std::out_of_range);
  EXPECT_NE(explain("nosplit").find("nosplit"), std::string::npos);
}

TEST(ValidatePrimesTest, RejectsBadInput) {
  EXPECT_NO_THROW(validate_primes({3, 5, 31}));
  EXPECT_THROW(validate_primes({4}), std::invalid_argument);
  EXPECT_THROW(validate_primes({2}), std::invalid_argument);
  EXPECT_THROW(validate_primes({37}), std::invalid_argument);
  EXPECT_THROW(validate_primes({}), std::invalid_argument);
  EXPECT_THROW(run_suite({9}, config()), std::invalid_argument);
}

TEST(SuiteTest, SmallPrimesPass) {
  const auto reports = run_suite({5, 7}, config());
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].prime, 5);
  EXPECT_EQ(reports[1].prime, 7);
  EXPECT_TRUE(all_pass(reports));
  for (const CertificationReport& r : reports) {
    EXPECT_EQ(r.claims.size(), claim_registry().size());
    EXPECT_FALSE(r.halted_at.has_value());
    EXPECT_FALSE(r.timings_ms.has_value());
    EXPECT_EQ(r.genus, (r.prime - 1) / 2);
    EXPECT_EQ(r.series_order, 4 * r.prime + 4);
    ASSERT_TRUE(r.derham.splitting.value.has_value());
    EXPECT_FALSE(r.derham.splitting.value->splits);
    EXPECT_TRUE(r.derham.splitting.value->control_splits);
  }
}

TEST(SuiteTest, GenusOne) {
  const auto reports = run_suite({3}, config());
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].all_pass());
  EXPECT_EQ(reports[0].claim("nosplit").status, ClaimStatus::kPass);
}

TEST(SuiteTest, DeterministicAcrossWorkerCounts) {
  SuiteConfig one = config();
  one.workers = 1;
  SuiteConfig many = config();
  many.workers = 4;
  const std::vector<int> primes = {3, 5, 7};
  const std::string a = emit_report(run_suite(primes, one), ReportFormat::kJson);
  const std::string b = emit_report(run_suite(primes, many), ReportFormat::kJson);
  EXPECT_EQ(a, b);
}

TEST(SuiteTest, FailedStageSkipsDownstream) {
  SuiteConfig c = config();
  c.norton_budget = 0;
  const CertificationReport r = certify_prime(5, c);
  EXPECT_FALSE(r.all_pass());
  ASSERT_TRUE(r.halted_at.has_value());
  EXPECT_EQ(r.claim("aut_order").status, ClaimStatus::kPass);
  EXPECT_EQ(r.claim("nosplit").status, ClaimStatus::kSkipped);
  EXPECT_NE(r.claim("nosplit").detail.find("upstream"), std::string::npos);
  EXPECT_FALSE(r.derham.splitting.skipped.empty());
}

TEST(ReportTest, JsonShape) {
  SuiteConfig c = config();
  c.timings = true;
  const auto reports = run_suite({5}, c);
  const auto j = nlohmann::json::parse(emit_report(reports, ReportFormat::kJson));
  ASSERT_TRUE(j.contains("reports"));
  const auto& r = j["reports"][0];
  EXPECT_EQ(r["prime"], 5);
  EXPECT_EQ(r["claims"].size(), claim_registry().size());
  EXPECT_FALSE(r["timings"].contains("skipped"));
  EXPECT_EQ(j["all_pass"], true);
}

TEST(ReportTest, TextMentionsEveryClaim) {
  const std::string text = emit_report(run_suite({5}, config()), ReportFormat::kText);
  for (const ClaimInfo& c : claim_registry()) {
    EXPECT_NE(text.find(std::string(c.id)), std::string::npos) << c.id;
  }
  EXPECT_NE(text.find("ALL CERTIFICATES PASS"), std::string::npos);
}

TEST(ReportTest, WriteReport) {
  const auto reports = run_suite({3}, config());
  const auto path = std::filesystem::temp_directory_path() / "canonrep_verify_test.json";
  write_report(reports, ReportFormat::kJson, path.string());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(buffer.str(), emit_report(reports, ReportFormat::kJson));
  std::filesystem::remove(path);
  EXPECT_THROW(write_report(reports, ReportFormat::kJson, "/nonexistent-dir/x/report.json"),
               IOFailure);
}

}  // namespace
}  // namespace canonrep

#include "eulersum/report.hpp"
#include "eulersum/verify.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

using namespace eulersum;

TEST(Report, DuplicateIdsRejected) {
  VerificationReport r;
  r.add("a", "first", true, "1", "1", "exact");
  EXPECT_THROW(r.add("a", "again", false, "1", "2", "exact"), std::logic_error);
  EXPECT_EQ(r.passed(), 1u);
  EXPECT_EQ(r.failed(), 0u);
}

TEST(Report, JsonRoundTrip) {
  VerificationReport r(ReportMetadata{"exact", 42, 2000, 1000000, kVersion});
  r.add("x.1", "passes", true, "1/4", "1/4", "exact");
  r.add("x.2", "fails", false, "1", "0.99", "1e-3");
  r.note("a note");
  const json j = r;
  EXPECT_EQ(j["summary"]["passed"], 1);
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["checks"][1]["status"], "fail");
  EXPECT_EQ(j.get<VerificationReport>(), r);
  EXPECT_EQ(json::parse(j.dump()).get<VerificationReport>(), r);
}

TEST(Report, InconsistentSummaryRejected) {
  VerificationReport r;
  r.add("x", "d", true, "", "", "");
  json j = r;
  j["summary"]["failed"] = 3;
  EXPECT_THROW(j.get<VerificationReport>(), std::invalid_argument);
  j = r;
  j["checks"][0]["status"] = "maybe";
  EXPECT_THROW(j.get<VerificationReport>(), std::invalid_argument);
}

TEST(Report, ExactValueAndEstimateJson) {
  const json v = to_json_value(s_exact(7));
  EXPECT_EQ(v, json({{"coeff", "61/184320"}, {"pi_power", 7}}));
  EXPECT_EQ(pi_multiple_from_json(v), s_exact(7));
  const McEstimate e{1.25, 0.001, 100000, 9};
  const json je = e;
  EXPECT_EQ(je.get<McEstimate>(), e);
  EXPECT_TRUE(je.contains("std_error"));
}

TEST(Verify, ExactSuitePassesWithCorrectionNotes) {
  const VerificationReport r = run_verification("exact", {});
  EXPECT_TRUE(r.all_passed());
  EXPECT_GE(r.checks().size(), 50u);
  ASSERT_EQ(r.notes().size(), 3u);
  std::set<std::string> ids;
  for (const Check& c : r.checks()) ids.insert(c.id);
  EXPECT_TRUE(ids.count("calibration.bernoulli.without_factorial"));
  EXPECT_TRUE(ids.count("ratio_limit.m5"));
}

TEST(Verify, NumericSuitePassesAndIsDeterministic) {
  const VerificationReport a = run_verification("numeric", {7, 2000, 1000000, 0});
  const VerificationReport b = run_verification("numeric", {7, 2000, 1000000, 0});
  EXPECT_TRUE(a.all_passed());
  EXPECT_EQ(json(a).dump(), json(b).dump());
  EXPECT_EQ(a.metadata().seed, 7u);
}

TEST(Verify, SmallGridSpectralSuiteRuns) {
  // At N = 200 the O(1/N) error still sits inside the 1% bands.
  const VerificationReport r = run_verification("spectral", {0, 200, 1000000, 0});
  EXPECT_EQ(r.metadata().grid, 200);
  for (const Check& c : r.checks())
    if (c.id.rfind("spectral.eigenvalue.", 0) == 0) EXPECT_TRUE(c.passed) << c.id << " " << c.actual;
}

TEST(Verify, UnknownSuiteRejected) {
  EXPECT_THROW(run_verification("everything", {}), std::invalid_argument);
  EXPECT_TRUE(is_suite_name("montecarlo"));
}

TEST(Verify, RatioLimitFormat) { EXPECT_EQ(format_float(39680.0 / 50521.0, 6), "0.785416"); }

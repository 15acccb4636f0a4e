#include "eulersum/euler_sums.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace eulersum;

namespace {
BigRational q(long long p, long long d = 1) { return BigRational(p, d); }
}  // namespace

TEST(SCoeff, TableRow) {
  const BigRational want[] = {q(1, 4),       q(1, 8),        q(1, 32),        q(1, 96),
                              q(5, 1536),    q(1, 960),      q(61, 184320),   q(17, 161280),
                              q(277, 8257536), q(31, 2903040)};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(s_coeff(n), want[n - 1]) << n;
  EXPECT_THROW(s_coeff(0), std::domain_error);
}

TEST(SCoeff, PositiveWithBoundedDenominator) {
  for (int n = 1; n <= 40; ++n) {
    const BigRational c = s_coeff(n);
    EXPECT_EQ(c.sign(), 1);
    const BigInt bound = pow2(static_cast<unsigned>(n) + 1) * factorial(static_cast<unsigned>(n) - 1);
    EXPECT_EQ(bound % c.denominator(), 0) << n;
  }
}

TEST(SCoeff, ZetaAndL) {
  const BigRational zeta[] = {q(1, 6), q(1, 90), q(1, 945), q(1, 9450), q(1, 93555)};
  for (int n = 2; n <= 10; n += 2) EXPECT_EQ(zeta_coeff(n), zeta[n / 2 - 1]);
  EXPECT_EQ(l4_coeff(1), q(1, 4));
  EXPECT_EQ(l4_coeff(7), q(61, 184320));
  EXPECT_THROW(zeta_coeff(3), std::domain_error);
  EXPECT_THROW(l4_coeff(2), std::domain_error);
}

TEST(Conversions, ExamplesAndRouteAgreement) {
  EXPECT_EQ(s_coeff_via_bernoulli(2), q(1, 8));
  EXPECT_EQ(s_coeff_via_bernoulli(4), q(1, 96));
  EXPECT_EQ(s_coeff_via_bernoulli(10), q(31, 2903040));
  EXPECT_EQ(s_coeff_via_euler(1), q(1, 4));
  EXPECT_EQ(s_coeff_via_euler(3), q(1, 32));
  EXPECT_EQ(s_coeff_via_euler(7), q(61, 184320));
  for (int n = 1; n <= 60; ++n)
    EXPECT_EQ(s_coeff(n), n % 2 == 0 ? s_coeff_via_bernoulli(n) : s_coeff_via_euler(n)) << n;
  EXPECT_THROW(s_coeff_via_bernoulli(3), std::domain_error);
  EXPECT_THROW(s_coeff_via_euler(4), std::domain_error);
}

TEST(Conversions, InverseDirections) {
  for (unsigned m = 1; m <= 15; ++m)
    EXPECT_EQ(conversion::bernoulli_from_s(m, s_coeff(static_cast<int>(2 * m))), bernoulli(2 * m));
  for (unsigned m = 0; m <= 15; ++m)
    EXPECT_EQ(conversion::euler_from_s(m, s_coeff(static_cast<int>(2 * m + 1))),
              BigRational(euler_number(static_cast<int>(2 * m))));
}

TEST(Calibration, CorrectedFormsPassUncorrectedFail) {
  int seen = 0;
  for (const CalibrationEntry& e : conversion_calibration()) {
    ++seen;
    const bool corrected =
        e.id == "bernoulli.corrected" || e.id == "euler.corrected" || e.id == "power_sum.faulhaber";
    EXPECT_EQ(e.matches_table, corrected) << e.id;
    EXPECT_EQ(e.first_mismatch.empty(), corrected) << e.id;
  }
  EXPECT_EQ(seen, 6);
}

TEST(Calibration, UncorrectedFormsGiveTheKnownWrongValues) {
  EXPECT_EQ(conversion::bernoulli_from_s_uncorrected(1, s_coeff(2)), q(1, 12));
  EXPECT_EQ(conversion::euler_from_s_uncorrected(0, s_coeff(1)), q(1, 16));
}

TEST(PiMultiple, TextForms) {
  EXPECT_EQ(s_exact(4).to_string(), "1/96 · pi^4");
  EXPECT_EQ(s_exact(1).to_string(), "1/4 · pi");
  EXPECT_EQ(s_exact(2).to_compact_string(), "pi^2/8");
  EXPECT_EQ(s_exact(5).to_compact_string(), "5·pi^5/1536");
  EXPECT_EQ(PiMultiple(q(5, 24), 0).to_compact_string(), "5/24");
  EXPECT_EQ(PiMultiple(q(0), 3), PiMultiple(q(0), 0));
  EXPECT_NEAR(s_exact(4).to_double(), 1.0146780316041920, 1e-14);
}

TEST(SNumeric, WithinTailBound) {
  for (int n = 2; n <= 10; ++n) {
    SeriesValue s = s_numeric(n, 100000);
    EXPECT_LE(std::abs(s.value - s_exact(n).to_double()), s.tail_bound + 1e-9) << n;
  }
  SeriesValue s3 = s_numeric(3, 1000);
  EXPECT_LE(std::abs(s3.value - std::pow(std::numbers::pi, 3) / 32.0), s3.tail_bound);
  SeriesValue s10 = s_numeric(10, 10);
  EXPECT_NEAR(s10.value, s_exact(10).to_double(), 1e-12);
  EXPECT_THROW(s_numeric(1, 10), std::domain_error);
}

TEST(SNumeric, TailBoundIsAnUpperBound) {
  // With a small K the bound is far from float noise, so it must dominate the true error.
  for (int n = 2; n <= 6; ++n)
    for (long long K : {1LL, 5LL, 50LL}) {
      SeriesValue s = s_numeric(n, K);
      EXPECT_LE(std::abs(s.value - s_exact(n).to_double()), s.tail_bound) << n << " " << K;
    }
}

TEST(GEval, Examples) {
  GeneratingValue g0 = g_eval(0.0, 10);
  EXPECT_EQ(g0.closed, 0.0);
  EXPECT_EQ(g0.series, 0.0);
  EXPECT_NEAR(g_eval(0.5, 80).closed, std::numbers::pi / 8.0 * (std::sqrt(2.0) + 1.0), 1e-15);
  GeneratingValue gm = g_eval(-0.5, 60);
  EXPECT_LE(std::abs(gm.closed - gm.series), 1e-12);
  EXPECT_THROW(g_eval(1.0, 10), std::domain_error);
  EXPECT_THROW(g_eval(-1.5, 10), std::domain_error);
}

TEST(GEval, DifferenceWithinReportedTailBound) {
  for (double z : {-0.9, -0.5, -0.1, 0.3, 0.5, 0.9})
    for (int terms : {10, 40, 80}) {
      GeneratingValue g = g_eval(z, terms);
      EXPECT_LE(std::abs(g.closed - g.series), g.tail_bound + 1e-12) << z << " " << terms;
    }
}

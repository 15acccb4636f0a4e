#pragma once

/**
 * @file verify.hpp
 * @brief The verification suites behind `eulersum verify`: reference
 * tables, cross-route identities, and numeric, Monte Carlo and spectral
 * checks, each recorded as a Check in a VerificationReport.
 */

#include "eulersum/euler_sums.hpp"
#include "eulersum/monte_carlo.hpp"
#include "eulersum/polytope.hpp"
#include "eulersum/report.hpp"
#include "eulersum/spectral.hpp"
#include "eulersum/special_numbers.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace eulersum {

struct VerifyConfig {
  std::uint64_t seed = 0;
  int grid = 2000;
  std::uint64_t samples = 1'000'000;
  unsigned workers = 0;
};

// ---------------------------------------------------------------------------
// Reference tables

struct ReferenceTables {
  std::array<BigRational, 10> s_coeff = {
      BigRational(1, 4),      BigRational(1, 8),       BigRational(1, 32),
      BigRational(1, 96),     BigRational(5, 1536),    BigRational(1, 960),
      BigRational(61, 184320), BigRational(17, 161280), BigRational(277, 8257536),
      BigRational(31, 2903040)};
  // zeta coefficients at n = 2, 4, ..., 10
  std::array<BigRational, 5> zeta_coeff = {BigRational(1, 6), BigRational(1, 90),
                                           BigRational(1, 945), BigRational(1, 9450),
                                           BigRational(1, 93555)};
  std::array<long long, 10> zigzag = {1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
  // A_0 at n = 2, 4, ..., 10
  std::array<long long, 5> cyclic_zigzag = {1, 4, 48, 1088, 39680};
};

inline const ReferenceTables& reference_tables() {
  static const ReferenceTables t;
  return t;
}

// ---------------------------------------------------------------------------
// Reusable batteries (also used by the acceptance tests)

/// max over `count` random x in (0,1)^n of |forward_map(inverse_map(x)) - x|_inf.
inline double cube_map_roundtrip_error(int n, int count, std::uint64_t seed,
                                     const InverseOptions& opt = {}) {
  std::mt19937_64 rng(splitmix64(seed) ^ static_cast<std::uint64_t>(n));
  double worst = 0.0;
  Point x(static_cast<std::size_t>(n));
  for (int c = 0; c < count; ++c) {
    for (double& xi : x) {
      do xi = uniform01(rng);
      while (xi == 0.0);
    }
    worst = std::max(worst, max_abs_diff(forward_map(inverse_map(x, opt)), x));
  }
  return worst;
}

/// Random u in P_n at distance >= margin from every facet.
inline Point random_interior_point(int n, double margin, std::mt19937_64& rng) {
  Point u(static_cast<std::size_t>(n));
  const double lo = margin, hi = kHalfPi - margin;
  for (;;) {
    for (double& ui : u) ui = lo + (hi - lo) * uniform01(rng);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = u[i] + u[(i + 1) % n] < kHalfPi - margin;
    if (ok) return u;
  }
}

/// max over `count` interior points of |jacobian_fd - formula| / |formula|.
inline double cube_map_jacobian_error(int n, int count, std::uint64_t seed, double h = 1e-6) {
  std::mt19937_64 rng(splitmix64(seed + 1) ^ static_cast<std::uint64_t>(n));
  double worst = 0.0;
  for (int c = 0; c < count; ++c) {
    Point u = random_interior_point(n, 1e-3, rng);
    const double formula = jacobian_formula(forward_map(u));
    worst = std::max(worst, std::abs(jacobian_fd(u, h) - formula) / std::abs(formula));
  }
  return worst;
}

struct McCase {
  std::string id;
  std::string description;
  double exact = 0.0;
  McEstimate estimate;
};

struct McBattery {
  std::vector<McCase> cases;
  std::uint64_t seed_used = 0;
  bool retried = false;
  bool all_within() const {
    for (const McCase& c : cases)
      if (!c.estimate.within(c.exact)) return false;
    return true;
  }
};

inline McBattery run_mc_battery_once(std::uint64_t seed, std::uint64_t samples, unsigned workers) {
  McBattery b;
  b.seed_used = seed;
  struct VolumeCase {
    PolytopeSpec spec;
  };
  const std::array<PolytopeSpec, 5> specs = {
      PolytopeSpec{PolytopeKind::cyclic, 2, PolytopeScale::half_pi},
      PolytopeSpec{PolytopeKind::cyclic, 3, PolytopeScale::half_pi},
      PolytopeSpec{PolytopeKind::cyclic, 4, PolytopeScale::half_pi},
      PolytopeSpec{PolytopeKind::chain, 3, PolytopeScale::unit},
      PolytopeSpec{PolytopeKind::chain, 5, PolytopeScale::unit}};
  for (const PolytopeSpec& s : specs) {
    McCase c;
    c.id = "mc.volume." + to_string(s.kind) + "." + std::to_string(s.n);
    c.description = "indicator Monte Carlo volume, " + to_string(s.kind) + "/" +
                    to_string(s.scale) + " n=" + std::to_string(s.n);
    c.exact = volume_formula(s).to_double();
    c.estimate = mc_volume(s, samples, seed, workers);
    b.cases.push_back(std::move(c));
  }
  for (int n : {2, 3}) {
    McCase c;
    c.id = "mc.cube_integral." + std::to_string(n);
    c.description = "cube integral of 1/(1 -+ (prod x)^2), n=" + std::to_string(n);
    c.exact = s_exact(n).to_double();
    c.estimate = mc_cube_integral(n, samples, seed, workers);
    b.cases.push_back(std::move(c));
  }
  return b;
}

/// Runs the battery; if any case misses 4 standard errors, reruns the whole
/// battery once on seed + 1 and reports that attempt.
inline McBattery run_mc_battery(std::uint64_t seed, std::uint64_t samples, unsigned workers = 0) {
  McBattery b = run_mc_battery_once(seed, samples, workers);
  if (b.all_within()) return b;
  McBattery again = run_mc_battery_once(seed + 1, samples, workers);
  again.retried = true;
  return again;
}

struct SpectralSummary {
  std::vector<double> top;       // by decreasing |lambda|
  std::vector<double> all;       // ascending
  std::array<double, 3> trace{}; // n = 2, 3, 4
};

inline SpectralSummary spectral_summary(int N, int top) {
  SpectralSummary s;
  const DenseMatrix m = nystrom_matrix(N).dense();
  s.all = symmetric_eigenvalues(m);
  s.top = s.all;
  std::stable_sort(s.top.begin(), s.top.end(),
                   [](double a, double b) { return std::abs(a) > std::abs(b); });
  s.top.resize(static_cast<std::size_t>(top));

  // trace(M^2) = sum M_ij^2, trace(M^3) = sum (M^2)_ij M_ji, trace(M^4) = |M^2|_F^2
  const DenseMatrix m2 = m * m;
  double t2 = 0.0, t3 = 0.0, t4 = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      t2 += m(i, j) * m(j, i);
      t3 += m2(i, j) * m(j, i);
      t4 += m2(i, j) * m2(j, i);
    }
  s.trace = {t2, t3, t4};
  return s;
}

// ---------------------------------------------------------------------------
// Suites

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline void exact_suite(VerificationReport& r) {
  const ReferenceTables& ref = reference_tables();
  for (int n = 1; n <= 10; ++n) {
    BigRational got = s_coeff(n);
    r.add("table.s_coeff." + std::to_string(n), "pi^-n S(n) matches the reference table",
          got == ref.s_coeff[n - 1], ref.s_coeff[n - 1].to_string(), got.to_string(), "exact");
  }
  for (int n = 2; n <= 10; n += 2) {
    BigRational got = zeta_coeff(n);
    r.add("table.zeta_coeff." + std::to_string(n), "pi^-n zeta(n) matches the reference table",
          got == ref.zeta_coeff[n / 2 - 1], ref.zeta_coeff[n / 2 - 1].to_string(), got.to_string(),
          "exact");
  }
  for (unsigned m = 0; m <= 5; ++m) {
    BigRational got = bernoulli(2 * m);
    r.add("table.bernoulli." + std::to_string(2 * m), "B_n matches the reference table",
          got == bernoulli_table()[m], bernoulli_table()[m].to_string(), got.to_string(), "exact");
  }
  for (int m = 0; m <= 4; ++m) {
    BigInt got = euler_number(2 * m);
    r.add("table.euler." + std::to_string(2 * m), "E_n matches the reference table",
          got == euler_table()[m], std::to_string(euler_table()[m]), got.str(), "exact");
  }
  for (int n = 1; n <= 10; ++n) {
    BigInt rec = zigzag(static_cast<unsigned>(n));
    BigInt brute = zigzag_bruteforce(n);
    const std::string want = std::to_string(ref.zigzag[n - 1]);
    r.add("table.zigzag." + std::to_string(n),
          "A(n) by boustrophedon and by enumeration match the reference table",
          rec == ref.zigzag[n - 1] && brute == ref.zigzag[n - 1], want,
          rec.str() + " / " + brute.str(), "exact");
  }
  for (int n = 2; n <= 10; n += 2) {
    BigInt rec = cyclic_zigzag(n);
    BigInt brute = cyclic_zigzag_bruteforce(n);
    const std::string want = std::to_string(ref.cyclic_zigzag[n / 2 - 1]);
    r.add("table.cyclic_zigzag." + std::to_string(n),
          "A_0(n) = (n/2) A(n-1) and by enumeration match the reference table",
          rec == ref.cyclic_zigzag[n / 2 - 1] && brute == ref.cyclic_zigzag[n / 2 - 1], want,
          rec.str() + " / " + brute.str(), "exact");
  }

  {
    int bad = 0;
    for (int n = 2; n <= 60; n += 2) bad += s_coeff(n) != s_coeff_via_bernoulli(n);
    r.add("routes.bernoulli", "zigzag route equals Bernoulli route, even n <= 60", bad == 0,
          "0 mismatches", std::to_string(bad) + " mismatches", "exact");
    bad = 0;
    for (int n = 1; n <= 59; n += 2) bad += s_coeff(n) != s_coeff_via_euler(n);
    r.add("routes.euler", "zigzag route equals Euler route, odd n <= 59", bad == 0,
          "0 mismatches", std::to_string(bad) + " mismatches", "exact");
  }
  {
    int bad = 0;
    for (int n = 1; n <= 10; ++n) {
      BigRational ext = order_polytope_volume(chain_poset(n));
      bad += ext != volume_formula({PolytopeKind::chain, n, PolytopeScale::unit}).coeff;
      bad += ext != BigRational(zigzag(static_cast<unsigned>(n)), factorial(static_cast<unsigned>(n)));
    }
    r.add("routes.order_polytope.chain",
          "linear extensions / n! = A(n)/n! for the chain poset, n <= 10", bad == 0,
          "0 mismatches", std::to_string(bad) + " mismatches", "exact");
    bad = 0;
    for (int n = 2; n <= 10; n += 2) {
      BigRational ext = order_polytope_volume(cyclic_poset(n));
      bad += ext != volume_formula({PolytopeKind::cyclic, n, PolytopeScale::unit}).coeff;
      bad += ext != BigRational(cyclic_zigzag(n), factorial(static_cast<unsigned>(n)));
    }
    r.add("routes.order_polytope.cyclic",
          "linear extensions / n! = 2^n S(n)/pi^n = A_0(n)/n! for the cyclic poset, even n <= 10",
          bad == 0, "0 mismatches", std::to_string(bad) + " mismatches", "exact");
  }
  {
    int bad = 0;
    std::string first;
    for (int n = 1; n <= 20; ++n) {
      PiPoly got = inner_product_one(n);
      const unsigned un = static_cast<unsigned>(n);
      PiPoly want = PiPoly::monomial(
          BigRational(zigzag(un), factorial(un) * pow2(un)), un);
      if (got != want) {
        ++bad;
        if (first.empty()) first = "n=" + std::to_string(n) + ": " + got.to_string();
      }
    }
    r.add("spectral.exact.inner_product_monomial",
          "<1, T^(n-1) 1> is exactly (A(n)/n!)(pi/2)^n for 1 <= n <= 20", bad == 0,
          "0 mismatches", bad == 0 ? "0 mismatches" : first, "exact");
    bad = 0;
    for (int n = 1; n <= 20; ++n) bad += !t_power_one(n).evaluate(PiPoly::half_pi()).is_zero();
    r.add("spectral.exact.vanishes_at_half_pi", "(T^n 1)(pi/2) = 0 for 1 <= n <= 20", bad == 0,
          "0 nonzero", std::to_string(bad) + " nonzero", "exact");
  }
  {
    int bad = 0;
    for (int n = 2; n <= 16; n += 2) {
      const unsigned un = static_cast<unsigned>(n);
      BigRational want = BigRational(pow2(un - 1) * (pow2(un) - 1)) * bernoulli(un).abs();
      bad += BigRational(cyclic_zigzag(n)) != want;
    }
    r.add("identity.cyclic_zigzag_bernoulli", "A_0(n) = 2^(n-1) (2^n - 1) |B_n|, even n <= 16",
          bad == 0, "0 mismatches", std::to_string(bad) + " mismatches", "exact");
    bad = 0;
    for (unsigned m = 1; m <= 20; ++m) {
      const int want = (m % 2 == 1) ? 1 : -1;
      bad += bernoulli(2 * m).sign() != want;
    }
    r.add("identity.bernoulli_sign", "(-1)^(m-1) B_2m > 0 for 1 <= m <= 20", bad == 0,
          "0 sign errors", std::to_string(bad) + " sign errors", "exact");
  }

  for (const CalibrationEntry& e : conversion_calibration()) {
    const bool should_match = e.id == "bernoulli.corrected" || e.id == "euler.corrected" ||
                              e.id == "power_sum.faulhaber";
    r.add("calibration." + e.id, e.description, e.matches_table == should_match,
          should_match ? "reproduces tables" : "fails tables",
          e.matches_table ? "reproduces tables" : "fails tables (" + e.first_mismatch + ")",
          "exact");
  }

  {
    BigInt a0 = cyclic_zigzag(10), a = zigzag(10);
    BigRational ratio(a0, a);
    const double err = std::abs(ratio.to_double() - std::numbers::pi / 4.0);
    r.add("ratio_limit.m5", "A_0(10)/A(10) = 39680/50521 and within 2e-5 of pi/4",
          a0 == 39680 && a == 50521 && err < 2e-5, "39680/50521, |ratio - pi/4| < 2e-5",
          a0.str() + "/" + a.str() + ", " + format_float(err, 6), "2e-05");
  }

  r.note("S(2m) = (-1)^(m-1) (2^2m - 1) pi^2m B_2m / (2 (2m)!): the (2m)! factor is required; "
         "without it B_2 comes out as 1/12 instead of 1/6.");
  r.note("S(2m+1) = (-1)^m E_2m pi^(2m+1) / (2^(2m+2) (2m)!): with (2m)! 2^(2m+2) placed on the "
         "Euler side instead, E_0 comes out as 1/16 instead of 1.");
  r.note("Power sums use sum_{k=0}^{N-1} k^p = 1/(p+1) sum_{m=0}^{p} C(p+1,m) B_m N^(p+1-m) "
         "with B_1 = -1/2; the form 1/n sum_{m=1}^{n} C(n,m) B_m N^(n-m) gives -1/2 at n = 1.");
}

inline void numeric_suite(VerificationReport& r, const VerifyConfig& cfg) {
  for (int n = 2; n <= 10; ++n) {
    SeriesValue s = s_numeric(n, 100000);
    const double exact = s_exact(n).to_double();
    const double err = std::abs(s.value - exact);
    r.add("numeric.s_numeric." + std::to_string(n), "direct summation, K = 1e5, vs exact S(n)",
          err <= s.tail_bound + 1e-9, format_float(exact, 15), format_float(s.value, 15),
          "tail_bound + 1e-9 = " + format_float(s.tail_bound + 1e-9, 4));
  }
  for (double z : {-0.9, -0.5, 0.5, 0.9}) {
    GeneratingValue g = g_eval(z, 80);
    const double err = std::abs(g.closed - g.series);
    r.add("numeric.g_eval." + format_float(z, 2), "closed form of G(z) vs 80-term series",
          err <= g.tail_bound + 1e-12, format_float(g.closed, 15), format_float(g.series, 15),
          "series tail bound + 1e-12 = " + format_float(g.tail_bound + 1e-12, 4));
  }
  {
    ArctangentCheck a = arctangent_check();
    const double err = std::abs(a.exact.to_double() - a.numeric);
    r.add("numeric.arctangent", "S(1) = pi/4 vs Simpson quadrature of 1/(1+x^2)", err < 1e-10,
          a.exact.to_compact_string(), format_float(a.numeric, 15), "1e-10");
  }
  for (int n : {1, 2, 3, 5, 8}) {
    const double rt = cube_map_roundtrip_error(n, 100, cfg.seed);
    r.add("cube_map.roundtrip." + std::to_string(n),
          "max |forward(inverse(x)) - x| over 100 random x", rt < 1e-10, "< 1e-10",
          format_float(rt, 4), "1e-10");
    const double jac = cube_map_jacobian_error(n, 100, cfg.seed);
    r.add("cube_map.jacobian." + std::to_string(n),
          "max relative error of finite-difference Jacobian vs 1 -+ (prod x)^2", jac < 1e-5,
          "< 1e-5", format_float(jac, 4), "1e-5");
  }
  for (int n : {0, 1, 2}) {
    const long long K = 10000;
    const double got = parseval_sum(n, K);
    const double want = inner_product_one(n + 1).to_double();
    const double tail = (4.0 / std::numbers::pi) * 2.0 * std::pow(4.0 * K - 3.0, -(n + 1.0)) /
                        (4.0 * (n + 1.0));
    r.add("spectral.parseval." + std::to_string(n),
          "(pi/4) sum c_k^2/(4k+1)^n, |k| <= 1e4, vs <1, T^n 1>",
          std::abs(got - want) <= tail + 1e-12, format_float(want, 15), format_float(got, 15),
          "tail bound " + format_float(tail, 4));
  }
  for (long long k : {-1LL, 0LL, 1LL, 2LL}) {
    const double quad = fourier_coeff_quadrature([](double) { return 1.0; }, k);
    const double want = fourier_coeff_const(k);
    r.add("spectral.fourier_coeff." + std::to_string(k),
          "coefficient of cos((4k+1)u) in 1: (4/pi)/(4k+1) vs quadrature",
          std::abs(quad - want) < 1e-6, format_float(want, 12), format_float(quad, 12), "1e-6");
  }
}

inline void montecarlo_suite(VerificationReport& r, const VerifyConfig& cfg) {
  McBattery b = run_mc_battery(cfg.seed, cfg.samples, cfg.workers);
  for (const McCase& c : b.cases) {
    r.add(c.id, c.description, c.estimate.within(c.exact), format_float(c.exact, 10),
          format_float(c.estimate.mean, 10) + " +- " + format_float(c.estimate.std_error, 3),
          "4 std_error");
  }
  if (b.retried)
    r.note("Monte Carlo battery missed 4 standard errors on seed " + std::to_string(cfg.seed) +
           " and was rerun once on seed " + std::to_string(b.seed_used) + ".");
}

inline void spectral_suite(VerificationReport& r, const VerifyConfig& cfg) {
  const int N = cfg.grid;
  SpectralSummary s = spectral_summary(N, 5);
  for (int i = 0; i < 5; ++i) {
    const double want = exact_eigenvalue(i);
    const double rel = std::abs(s.top[i] - want) / std::abs(want);
    r.add("spectral.eigenvalue." + std::to_string(i),
          "Nystrom eigenvalue " + std::to_string(i) + " by |lambda| vs 1/(4k+1)", rel < 0.01,
          format_float(want, 10), format_float(s.top[i], 10), "1% relative");
  }
  {
    double min_gap = 1e300;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) min_gap = std::min(min_gap, std::abs(s.top[i] - s.top[j]));
    // 10x the 1% tolerance at the smallest of the five eigenvalues.
    const double needed = 10.0 * 0.01 * (1.0 / 9.0);
    r.add("spectral.multiplicity", "top-5 Nystrom eigenvalues are pairwise well separated",
          min_gap > needed, "> " + format_float(needed, 4), format_float(min_gap, 6),
          "10x eigenvalue tolerance");
  }
  for (int n = 2; n <= 4; ++n) {
    const double want = s_exact(n).to_double();
    const double got = s.trace[n - 2];
    const double rel = std::abs(got - want) / want;
    r.add("spectral.trace." + std::to_string(n), "trace(M^n) vs S(n)", rel < 0.01,
          format_float(want, 10), format_float(got, 10), "1% relative");
  }
  {
    // sum of lambda^3 over the 21 largest eigenvalues vs trace(M^3); the
    // remainder behaves like the exact tail sum_{|k|>10} |4k+1|^-3.
    std::vector<double> by_mag = s.all;
    std::stable_sort(by_mag.begin(), by_mag.end(),
                     [](double a, double b) { return std::abs(a) > std::abs(b); });
    double partial = 0.0;
    for (int i = 0; i < 21 && i < static_cast<int>(by_mag.size()); ++i)
      partial += std::pow(by_mag[i], 3);
    double tail = 0.0;
    for (int k = 11; k < 100000; ++k)
      tail += std::pow(4.0 * k + 1.0, -3) + std::pow(4.0 * k - 1.0, -3);
    const double tol = 2.0 * tail;
    r.add("spectral.sum_vs_trace.3", "sum of lambda^3 over 21 top eigenvalues vs trace(M^3)",
          std::abs(partial - s.trace[1]) <= tol, format_float(s.trace[1], 10),
          format_float(partial, 10), "2 x exact tail = " + format_float(tol, 4));
  }
  for (int k : {0, -1, 1}) {
    const double res = eigenfunction_residual(k, 1000);
    r.add("spectral.eigenfunction." + std::to_string(k),
          "cos((4k+1)u) satisfies the eigen-equation on a 1000-point grid", res < 1e-4, "< 1e-4",
          format_float(res, 4), "1e-4");
  }
}

}  // namespace detail

inline bool is_suite_name(const std::string& s) {
  return s == "exact" || s == "numeric" || s == "montecarlo" || s == "spectral" || s == "all";
}

inline VerificationReport run_verification(const std::string& suite, const VerifyConfig& cfg) {
  if (!is_suite_name(suite)) throw std::invalid_argument("unknown suite: " + suite);
  VerificationReport r(ReportMetadata{suite, cfg.seed, cfg.grid, cfg.samples, kVersion});
  const bool all = suite == "all";
  if (all || suite == "exact") detail::exact_suite(r);
  if (all || suite == "numeric") detail::numeric_suite(r, cfg);
  if (all || suite == "montecarlo") detail::montecarlo_suite(r, cfg);
  if (all || suite == "spectral") detail::spectral_suite(r, cfg);
  return r;
}

}  // namespace eulersum

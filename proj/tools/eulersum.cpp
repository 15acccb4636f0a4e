// eulersum: command-line front end for the eulersum library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "eulersum/eulersum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

using eulersum::format_float;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr const char* kConfigEnv = "EULERSUM_CONFIG";

/// Thrown for bad input that the argument parser cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  bool json = false;
  bool quiet = false;
  int digits = 12;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1'000'000;
  int grid = 2000;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value) || !in.eof()) throw UsageError("config: bad value for " + key + ": " + text);
  return value;
}

/// Flat "key = value" lines; '#' starts a comment. Known keys only.
void load_config(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config: line " + std::to_string(lineno) + " is not key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "grid")
      s.grid = parse_number<int>(key, value);
    else if (key == "samples")
      s.samples = parse_number<std::uint64_t>(key, value);
    else if (key == "seed")
      s.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "digits")
      s.digits = parse_number<int>(key, value);
    else
      throw UsageError("config: unknown key " + key);
  }
}

void validate(const Settings& s) {
  if (s.digits < 1 || s.digits > 17) throw UsageError("--digits must lie in 1..17");
  if (s.grid < 2) throw UsageError("--grid must be >= 2");
  if (s.samples < eulersum::kMinSamples)
    throw UsageError("--samples must be >= " + std::to_string(eulersum::kMinSamples));
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

json exact_json(const eulersum::PiMultiple& v, int digits) {
  json j = eulersum::to_json_value(v);
  j["float"] = format_float(v.to_double(), digits);
  return j;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_sums(const Settings& s, int n) {
  if (n < 1) throw UsageError("sums: n must be >= 1 (the series diverges at n = 0)");
  const eulersum::PiMultiple v = eulersum::s_exact(n);
  const bool even = n % 2 == 0;
  const eulersum::PiMultiple companion =
      even ? eulersum::PiMultiple{eulersum::zeta_coeff(n), static_cast<unsigned>(n)}
           : eulersum::PiMultiple{eulersum::l4_coeff(n), static_cast<unsigned>(n)};
  const std::string companion_name =
      even ? "zeta(" + std::to_string(n) + ")" : "L(" + std::to_string(n) + ", chi_4)";
  if (s.json) {
    json j{{"n", n}, {"S", exact_json(v, s.digits)}};
    j[even ? "zeta" : "L_chi4"] = exact_json(companion, s.digits);
    print_json(j);
    return kExitOk;
  }
  std::cout << "S(" << n << ") = " << v.to_string() << " ≈ " << format_float(v.to_double(), s.digits)
            << '\n';
  if (!s.quiet)
    std::cout << companion_name << " = " << companion.to_string() << " ≈ "
              << format_float(companion.to_double(), s.digits) << '\n';
  return kExitOk;
}

int cmd_tables(const Settings& s) {
  using namespace eulersum;
  if (s.json) {
    json j;
    for (int n = 1; n <= 10; ++n) {
      json row{{"n", n}, {"s_coeff", s_coeff(n).to_fraction_string()}};
      if (n % 2 == 0) row["zeta_coeff"] = zeta_coeff(n).to_fraction_string();
      j["sums"].push_back(row);
    }
    for (unsigned n = 0; n <= 10; n += 2)
      j["bernoulli_euler"].push_back({{"n", n},
                                      {"B", bernoulli(n).to_fraction_string()},
                                      {"E", euler_number(static_cast<int>(n)).str()}});
    for (int n = 1; n <= 10; ++n) {
      json row{{"n", n}, {"A", zigzag(static_cast<unsigned>(n)).str()}};
      if (n % 2 == 0) row["A0"] = cyclic_zigzag(n).str();
      j["permutations"].push_back(row);
    }
    print_json(j);
    return kExitOk;
  }
  std::printf("pi^-n S(n) and pi^-n zeta(n)\n");
  std::printf("%3s  %-16s %s\n", "n", "S", "zeta");
  for (int n = 1; n <= 10; ++n)
    std::printf("%3d  %-16s %s\n", n, s_coeff(n).to_fraction_string().c_str(),
                n % 2 == 0 ? zeta_coeff(n).to_fraction_string().c_str() : "-");
  std::printf("\nBernoulli and Euler numbers\n");
  std::printf("%3s  %-16s %s\n", "n", "B_n", "E_n");
  for (unsigned n = 0; n <= 10; n += 2)
    std::printf("%3u  %-16s %s\n", n, bernoulli(n).to_string().c_str(),
                euler_number(static_cast<int>(n)).str().c_str());
  std::printf("\nAlternating permutations\n");
  std::printf("%3s  %-16s %s\n", "n", "A(n)", "A_0(n)");
  for (int n = 1; n <= 10; ++n)
    std::printf("%3d  %-16s %s\n", n, zigzag(static_cast<unsigned>(n)).str().c_str(),
                n % 2 == 0 ? cyclic_zigzag(n).str().c_str() : "-");
  return kExitOk;
}

int cmd_volume(const Settings& s, const std::string& kind_name, int n, const std::string& method,
               const std::optional<std::string>& scale_name) {
  using namespace eulersum;
  PolytopeKind kind;
  try {
    kind = parse_kind(kind_name);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (n < 1) throw UsageError("volume: n must be >= 1");
  const PolytopeScale scale = scale_name ? parse_scale(*scale_name)
                              : method == "extensions" ? PolytopeScale::unit
                                                       : PolytopeScale::half_pi;
  const PolytopeSpec spec{kind, n, scale};
  const std::string label = to_string(kind) + "/" + to_string(scale) + " n=" + std::to_string(n);
  // (pi/2)^n, the ratio of half_pi to unit volumes.
  const PiMultiple box_ratio{BigRational(1, pow2(static_cast<unsigned>(n))),
                             static_cast<unsigned>(n)};

  if (method == "exact") {
    if (kind == PolytopeKind::cyclic && n < 2)
      throw UsageError("volume: cyclic needs n >= 2 (n = 1 is the arctangent integral)");
    const PiMultiple v = volume_formula(spec);
    const bool odd_note = kind == PolytopeKind::cyclic && n % 2 == 1;
    const std::string note =
        "odd n has no cyclically alternating permutations; the value comes from S(n) alone";
    if (s.json) {
      json j{{"spec", label}, {"method", method}, {"value", exact_json(v, s.digits)}};
      if (odd_note) j["note"] = note;
      print_json(j);
    } else {
      std::cout << v.to_compact_string() << '\n';
      if (!s.quiet) {
        std::cout << "≈ " << format_float(v.to_double(), s.digits) << '\n';
        if (odd_note) std::cout << "note: " << note << '\n';
      }
    }
    return kExitOk;
  }

  if (method == "extensions") {
    if (n > kBruteForceLimit)
      throw UsageError("volume: extensions enumerates n! permutations; n must be <= 10");
    if (kind == PolytopeKind::cyclic && (n < 2 || n % 2 == 1))
      throw UsageError("volume: the cyclic poset exists only for even n >= 2");
    const PartialOrder p = kind == PolytopeKind::cyclic ? cyclic_poset(n) : chain_poset(n);
    const BigInt count = linear_extension_count(p);
    PiMultiple v{order_polytope_volume(p), 0};
    if (scale == PolytopeScale::half_pi) v = PiMultiple{v.coeff * box_ratio.coeff, box_ratio.power};
    if (s.json) {
      print_json({{"spec", label},
                  {"method", method},
                  {"linear_extensions", count.str()},
                  {"value", exact_json(v, s.digits)}});
    } else {
      std::cout << v.to_compact_string() << '\n';
      if (!s.quiet)
        std::cout << "linear extensions: " << count.str() << " of " << factorial(n).str()
                  << " permutations\n";
    }
    return kExitOk;
  }

  if (method == "spectral") {
    if (kind != PolytopeKind::cyclic) throw UsageError("volume: spectral applies to cyclic only");
    if (n < 2) throw UsageError("volume: spectral needs n >= 2 (T is not trace class)");
    double value = trace_power_nystrom(s.grid, n);
    if (scale == PolytopeScale::unit) value /= box_ratio.to_double();
    const double exact = volume_formula(spec).to_double();
    if (s.json) {
      print_json({{"spec", label},
                  {"method", method},
                  {"grid", s.grid},
                  {"value", value},
                  {"exact", format_float(exact, s.digits)}});
    } else {
      std::cout << format_float(value, s.digits) << '\n';
      if (!s.quiet)
        std::cout << "trace(M^" << n << "), N = " << s.grid << "; exact "
                  << format_float(exact, s.digits) << ", relative error "
                  << format_float(std::abs(value - exact) / exact, 3) << '\n';
    }
    return kExitOk;
  }

  if (method == "montecarlo" || method == "cube-integral") {
    McEstimate e;
    double exact = 0.0;
    if (method == "montecarlo") {
      e = mc_volume(spec, s.samples, s.seed);
      exact = (kind == PolytopeKind::cyclic && n < 2) ? std::nan("") : volume_formula(spec).to_double();
    } else {
      if (kind != PolytopeKind::cyclic) throw UsageError("volume: cube-integral applies to cyclic only");
      if (n < 2) throw UsageError("volume: cube-integral needs n >= 2");
      e = mc_cube_integral(n, s.samples, s.seed);
      if (scale == PolytopeScale::unit) {
        const double r = box_ratio.to_double();
        e.mean /= r;
        e.std_error /= r;
      }
      exact = volume_formula(spec).to_double();
    }
    if (s.json) {
      json j{{"spec", label}, {"method", method}, {"estimate", e}};
      if (!std::isnan(exact)) j["exact"] = format_float(exact, s.digits);
      print_json(j);
    } else {
      std::cout << format_float(e.mean, s.digits) << " ± " << format_float(e.std_error, 3) << '\n';
      if (!s.quiet) {
        std::cout << "samples " << e.samples << ", seed " << e.seed;
        if (!std::isnan(exact))
          std::cout << "; exact " << format_float(exact, s.digits) << ", deviation "
                    << format_float(std::abs(e.mean - exact) / e.std_error, 3) << " std_error";
        std::cout << '\n';
      }
    }
    return kExitOk;
  }

  throw UsageError("volume: unknown method " + method);
}

int cmd_ratio_limit(const Settings& s, int m_max) {
  using namespace eulersum;
  if (m_max < 1) throw UsageError("ratio-limit: m_max must be >= 1");
  const double quarter_pi = std::numbers::pi / 4.0;
  json rows = json::array();
  if (!s.json && !s.quiet)
    std::printf("%3s  %-28s %-16s %-12s %s\n", "m", "A_0(2m)/A(2m)", "ratio", "|ratio-pi/4|",
                "err(m-1)/err(m)");
  double prev = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    const BigInt a0 = cyclic_zigzag(2 * m);
    const BigInt a = zigzag(static_cast<unsigned>(2 * m));
    const double ratio = BigRational(a0, a).to_double();
    const double err = std::abs(ratio - quarter_pi);
    const std::string frac = a0.str() + "/" + a.str();
    if (s.json) {
      json row{{"m", m}, {"A0", a0.str()}, {"A", a.str()}, {"ratio", format_float(ratio, s.digits)},
               {"abs_error", format_float(err, 6)}};
      if (m > 1) row["decay"] = format_float(prev / err, 6);
      rows.push_back(row);
    } else {
      std::printf("%3d  %-28s %-16s %-12s %s\n", m, frac.c_str(),
                  format_float(ratio, s.digits).c_str(), format_float(err, 4).c_str(),
                  m > 1 ? format_float(prev / err, 4).c_str() : "-");
    }
    prev = err;
  }
  if (s.json) print_json(rows);
  return kExitOk;
}

void print_report_text(const eulersum::VerificationReport& r, bool quiet) {
  if (!quiet) {
    for (const eulersum::Check& c : r.checks())
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.actual << " (expected "
                << c.expected << ", tolerance " << c.tolerance << ")\n";
    for (const std::string& n : r.notes()) std::cout << "note: " << n << '\n';
  } else {
    for (const eulersum::Check& c : r.checks())
      if (!c.passed) std::cout << "FAIL " << c.id << ": " << c.actual << '\n';
  }
  const auto& m = r.metadata();
  std::cout << "suite " << m.suite << ": " << r.passed() << " passed, " << r.failed()
            << " failed (seed " << m.seed << ", grid " << m.grid << ", samples " << m.samples
            << ")\n";
}

int cmd_verify(const Settings& s, const std::string& suite) {
  if (!eulersum::is_suite_name(suite))
    throw UsageError("verify: suite must be one of exact, numeric, montecarlo, spectral, all");
  const eulersum::VerificationReport r =
      eulersum::run_verification(suite, {s.seed, s.grid, s.samples, 0});
  if (s.json)
    print_json(r);
  else
    print_report_text(r, s.quiet);
  return r.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_zigzag(const Settings& s, int n, bool cyclic) {
  using namespace eulersum;
  if (n < 0) throw UsageError("zigzag: n must be >= 0");
  if (cyclic && (n < 2 || n % 2 == 1))
    throw UsageError("zigzag: cyclically alternating permutations need even n >= 2");
  const BigInt v = cyclic ? cyclic_zigzag(n) : zigzag(static_cast<unsigned>(n));
  if (s.json)
    print_json({{"n", n}, {cyclic ? "A0" : "A", v.str()}});
  else
    std::cout << v.str() << '\n';
  return kExitOk;
}

int cmd_bernoulli(const Settings& s, int n) {
  if (n < 0) throw UsageError("bernoulli: n must be >= 0");
  const eulersum::BigRational b = eulersum::bernoulli(static_cast<unsigned>(n));
  if (s.json)
    print_json({{"n", n}, {"B", b.to_fraction_string()}, {"float", format_float(b.to_double(), s.digits)}});
  else
    std::cout << b.to_string() << '\n';
  return kExitOk;
}

int cmd_euler(const Settings& s, int n) {
  if (n < 0 || n % 2 == 1) throw UsageError("euler: n must be even and >= 0");
  const eulersum::BigInt e = eulersum::euler_number(n);
  if (s.json)
    print_json({{"n", n}, {"E", e.str()}});
  else
    std::cout << e.str() << '\n';
  return kExitOk;
}

int cmd_g_eval(const Settings& s, double z, int terms) {
  if (!(std::abs(z) < 1.0)) throw UsageError("g-eval: |z| must be < 1 (pole at z = 1)");
  if (terms < 1) throw UsageError("g-eval: --terms must be >= 1");
  const eulersum::GeneratingValue g = eulersum::g_eval(z, terms);
  const double diff = std::abs(g.closed - g.series);
  if (s.json) {
    print_json({{"z", z},
                {"terms", terms},
                {"closed", format_float(g.closed, s.digits)},
                {"series", format_float(g.series, s.digits)},
                {"abs_difference", format_float(diff, 4)},
                {"tail_bound", format_float(g.tail_bound, 4)}});
  } else {
    std::cout << "closed " << format_float(g.closed, s.digits) << '\n'
              << "series " << format_float(g.series, s.digits) << '\n';
    if (!s.quiet)
      std::cout << "|difference| " << format_float(diff, 4) << ", tail bound "
                << format_float(g.tail_bound, 4) << '\n';
  }
  return kExitOk;
}

int cmd_spectrum(const Settings& s, int top) {
  using namespace eulersum;
  if (top < 1 || top > s.grid) throw UsageError("spectrum: --top must lie in 1..grid");
  const std::vector<double> ev = sym_eigenvalues(nystrom_matrix(s.grid), top);
  json rows = json::array();
  if (!s.json && !s.quiet)
    std::printf("%4s  %-20s %-20s %s\n", "rank", "approx", "exact 1/(4k+1)", "abs error");
  for (int i = 0; i < top; ++i) {
    const double exact = exact_eigenvalue(i);
    const double err = std::abs(ev[i] - exact);
    if (s.json)
      rows.push_back({{"rank", i},
                      {"approx", format_float(ev[i], s.digits)},
                      {"exact", format_float(exact, s.digits)},
                      {"abs_error", format_float(err, 4)}});
    else
      std::printf("%4d  %-20s %-20s %s\n", i, format_float(ev[i], s.digits).c_str(),
                  format_float(exact, s.digits).c_str(), format_float(err, 4).c_str());
  }
  if (s.json) print_json({{"grid", s.grid}, {"eigenvalues", rows}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric routes to S(n) = sum over k of (4k+1)^-n"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", eulersum::kVersion);

  Settings s;
  std::optional<int> digits;
  std::optional<std::uint64_t> seed, samples;
  std::optional<int> grid;
  app.add_flag("--json", s.json, "Print machine-readable JSON");
  app.add_flag("--quiet", s.quiet, "Print only the primary result");
  app.add_option("--digits", digits, "Significant digits for floats (default 12)");
  app.add_option("--seed", seed, "Monte Carlo seed (default 0)");
  app.add_option("--samples", samples, "Monte Carlo sample count (default 1000000)");
  app.add_option("--grid", grid, "Nystrom grid size N (default 2000)");

  int n = 0;
  auto* sums = app.add_subcommand("sums", "S(n) as p/q · pi^n, with zeta(n) or L(n, chi_4)");
  sums->add_option("n", n)->required();

  auto* tables = app.add_subcommand("tables", "Reprint the coefficient and permutation tables");

  std::string kind, method;
  std::optional<std::string> scale;
  auto* volume = app.add_subcommand("volume", "Polytope volume by one of five routes");
  volume->add_option("kind", kind, "cyclic or chain")->required();
  volume->add_option("n", n, "dimension")->required();
  volume->add_option("method", method)
      ->required()
      ->check(CLI::IsMember({"exact", "extensions", "montecarlo", "spectral", "cube-integral"}));
  volume->add_option("--scale", scale, "unit or half_pi")
      ->check(CLI::IsMember({"unit", "half_pi"}));

  int m_max = 8;
  auto* ratio = app.add_subcommand("ratio-limit", "A_0(2m)/A(2m) against pi/4");
  ratio->add_option("m_max", m_max, "largest m (default 8)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "exact, numeric, montecarlo, spectral or all (default all)");

  bool cyclic = false;
  auto* zig = app.add_subcommand("zigzag", "A(n), or A_0(n) with --cyclic");
  zig->add_option("n", n)->required();
  zig->add_flag("--cyclic", cyclic, "Count cyclically alternating permutations");

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n (B_1 = -1/2)");
  bern->add_option("n", n)->required();

  auto* eul = app.add_subcommand("euler", "Euler number E_n, n even");
  eul->add_option("n", n)->required();

  double z = 0.0;
  int terms = 80;
  auto* geval = app.add_subcommand("g-eval", "Generating function closed form vs series");
  geval->add_option("z", z)->required();
  geval->add_option("--terms", terms, "series terms (default 80)");

  int top = 5;
  auto* spectrum = app.add_subcommand("spectrum", "Largest Nystrom eigenvalues vs 1/(4k+1)");
  spectrum->add_option("--top", top, "how many eigenvalues (default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (const char* path = std::getenv(kConfigEnv); path != nullptr && *path != '\0')
      load_config(path, s);
    if (digits) s.digits = *digits;
    if (seed) s.seed = *seed;
    if (samples) s.samples = *samples;
    if (grid) s.grid = *grid;
    validate(s);

    if (*sums) return cmd_sums(s, n);
    if (*tables) return cmd_tables(s);
    if (*volume) return cmd_volume(s, kind, n, method, scale);
    if (*ratio) return cmd_ratio_limit(s, m_max);
    if (*verify) return cmd_verify(s, suite);
    if (*zig) return cmd_zigzag(s, n, cyclic);
    if (*bern) return cmd_bernoulli(s, n);
    if (*eul) return cmd_euler(s, n);
    if (*geval) return cmd_g_eval(s, z, terms);
    if (*spectrum) return cmd_spectrum(s, top);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

#pragma once

/**
 * @file report.hpp
 * @brief Verification reports and the JSON forms of exact values and Monte
 * Carlo estimates.
 */

#include "eulersum/euler_sums.hpp"
#include "eulersum/monte_carlo.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulersum {

inline constexpr const char* kVersion = "0.1.0";

/// printf("%.*g") into a std::string.
inline std::string format_float(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

struct Check {
  std::string id;
  std::string description;
  bool passed = false;
  std::string expected;
  std::string actual;
  std::string tolerance;

  friend bool operator==(const Check&, const Check&) = default;
};

struct ReportMetadata {
  std::string suite;
  std::uint64_t seed = 0;
  int grid = 0;
  std::uint64_t samples = 0;
  std::string version = kVersion;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

class VerificationReport {
public:
  VerificationReport() = default;
  explicit VerificationReport(ReportMetadata meta) : metadata_(std::move(meta)) {}

  void add(Check c) {
    if (!ids_.insert(c.id).second) throw std::logic_error("duplicate check id: " + c.id);
    checks_.push_back(std::move(c));
  }
  void add(std::string id, std::string description, bool passed, std::string expected,
           std::string actual, std::string tolerance) {
    add(Check{std::move(id), std::move(description), passed, std::move(expected),
              std::move(actual), std::move(tolerance)});
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const ReportMetadata& metadata() const { return metadata_; }
  ReportMetadata& metadata() { return metadata_; }

  std::size_t passed() const {
    std::size_t n = 0;
    for (const Check& c : checks_) n += c.passed ? 1 : 0;
    return n;
  }
  std::size_t failed() const { return checks_.size() - passed(); }
  bool all_passed() const { return failed() == 0; }

  friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.checks_ == b.checks_ && a.notes_ == b.notes_ && a.metadata_ == b.metadata_;
  }

private:
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
  std::set<std::string> ids_;
  ReportMetadata metadata_;
};

// ---------------------------------------------------------------------------
// JSON

using nlohmann::json;

inline json to_json_value(const PiMultiple& v) {
  return json{{"coeff", v.coeff.to_fraction_string()}, {"pi_power", v.power}};
}

inline PiMultiple pi_multiple_from_json(const json& j) {
  return {BigRational::parse(j.at("coeff").get<std::string>()), j.at("pi_power").get<unsigned>()};
}

inline void to_json(json& j, const McEstimate& e) {
  j = json{{"mean", e.mean}, {"std_error", e.std_error}, {"samples", e.samples}, {"seed", e.seed}};
}
inline void from_json(const json& j, McEstimate& e) {
  j.at("mean").get_to(e.mean);
  j.at("std_error").get_to(e.std_error);
  j.at("samples").get_to(e.samples);
  j.at("seed").get_to(e.seed);
}

inline void to_json(json& j, const Check& c) {
  j = json{{"id", c.id},
           {"description", c.description},
           {"status", c.passed ? "pass" : "fail"},
           {"expected", c.expected},
           {"actual", c.actual},
           {"tolerance", c.tolerance}};
}
inline void from_json(const json& j, Check& c) {
  j.at("id").get_to(c.id);
  j.at("description").get_to(c.description);
  const std::string status = j.at("status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("bad check status: " + status);
  c.passed = status == "pass";
  j.at("expected").get_to(c.expected);
  j.at("actual").get_to(c.actual);
  j.at("tolerance").get_to(c.tolerance);
}

inline void to_json(json& j, const ReportMetadata& m) {
  j = json{{"suite", m.suite},
           {"seed", m.seed},
           {"grid", m.grid},
           {"samples", m.samples},
           {"version", m.version}};
}
inline void from_json(const json& j, ReportMetadata& m) {
  j.at("suite").get_to(m.suite);
  j.at("seed").get_to(m.seed);
  j.at("grid").get_to(m.grid);
  j.at("samples").get_to(m.samples);
  j.at("version").get_to(m.version);
}

inline void to_json(json& j, const VerificationReport& r) {
  j = json{{"checks", r.checks()},
           {"summary", {{"passed", r.passed()}, {"failed", r.failed()}}},
           {"notes", r.notes()},
           {"metadata", r.metadata()}};
}
inline void from_json(const json& j, VerificationReport& r) {
  r = VerificationReport(j.at("metadata").get<ReportMetadata>());
  for (const json& c : j.at("checks")) r.add(c.get<Check>());
  for (const json& n : j.at("notes")) r.note(n.get<std::string>());
  const json& s = j.at("summary");
  if (s.at("passed").get<std::size_t>() != r.passed() ||
      s.at("failed").get<std::size_t>() != r.failed())
    throw std::invalid_argument("report summary does not match its checks");
}

}  // namespace eulersum

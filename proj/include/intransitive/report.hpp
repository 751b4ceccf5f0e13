#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace intransitive {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

enum class OutputFormat { json, csv, plotdata };

std::string to_string(OutputFormat format);
OutputFormat format_from_string(const std::string& name);

/// A point estimate. Monte Carlo estimates carry a 99% normal-approximation
/// radius; exact values carry none and hold the exact rational as text.
struct Estimate {
  std::string name;
  int n = 0;
  double value = 0;
  std::uint64_t sample_size = 0;
  std::optional<double> radius;
  bool exact = false;
  std::optional<std::string> exact_value;

  bool operator==(const Estimate&) const = default;
};

enum class CheckStatus { pass, fail, vacuous, undefined, reported };

std::string to_string(CheckStatus status);
CheckStatus check_status_from_string(const std::string& name);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::reported;
  /// A failing hard check makes the CLI exit nonzero.
  bool hard = false;
  std::string detail;

  bool operator==(const CheckResult&) const = default;
};

struct Series {
  std::string name;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;

  bool operator==(const Series&) const = default;
};

struct ExperimentReport {
  int schema_version = kReportSchemaVersion;
  std::string tool_version = kToolVersion;
  std::string kind;
  nlohmann::json config = nlohmann::json::object();
  std::vector<Estimate> estimates;
  std::vector<CheckResult> checks;
  std::vector<Series> series;
  nlohmann::json details = nlohmann::json::object();
  std::optional<double> wall_seconds;

  bool has_hard_failure() const;
  bool operator==(const ExperimentReport&) const = default;
};

/// z for a two-sided 99% normal interval.
inline constexpr double kZ99 = 2.5758293035489004;

/// 99% radius for a proportion p estimated from `samples` draws.
double proportion_radius(double p, std::uint64_t samples);

Estimate monte_carlo_estimate(std::string name, int n, std::uint64_t hits, std::uint64_t samples);

void to_json(nlohmann::json& j, const Estimate& e);
void from_json(const nlohmann::json& j, Estimate& e);
void to_json(nlohmann::json& j, const CheckResult& c);
void from_json(const nlohmann::json& j, CheckResult& c);
void to_json(nlohmann::json& j, const Series& s);
void from_json(const nlohmann::json& j, Series& s);
void to_json(nlohmann::json& j, const ExperimentReport& r);
void from_json(const nlohmann::json& j, ExperimentReport& r);

/// Serialized report. Identical reports serialize to identical bytes.
std::string emit_report(const ExperimentReport& report, OutputFormat format);

/// Writes to `path`, or stdout when path is empty or "-". Throws std::runtime_error if unwritable.
void write_report(const ExperimentReport& report, OutputFormat format, const std::string& path);

}  // namespace intransitive

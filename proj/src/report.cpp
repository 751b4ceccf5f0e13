#include "intransitive/report.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace intransitive {

using nlohmann::json;

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::plotdata:
      return "plotdata";
  }
  return "json";
}

OutputFormat format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "plotdata") return OutputFormat::plotdata;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or plotdata)");
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::vacuous:
      return "vacuous";
    case CheckStatus::undefined:
      return "undefined";
    case CheckStatus::reported:
      return "reported";
  }
  return "reported";
}

CheckStatus check_status_from_string(const std::string& name) {
  for (CheckStatus s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::vacuous, CheckStatus::undefined,
                        CheckStatus::reported})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown check status '" + name + "'");
}

bool ExperimentReport::has_hard_failure() const {
  for (const auto& c : checks)
    if (c.hard && c.status == CheckStatus::fail) return true;
  return false;
}

double proportion_radius(double p, std::uint64_t samples) {
  if (samples == 0) return 0.0;
  return kZ99 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

Estimate monte_carlo_estimate(std::string name, int n, std::uint64_t hits, std::uint64_t samples) {
  Estimate e;
  e.name = std::move(name);
  e.n = n;
  e.sample_size = samples;
  e.value = samples == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(samples);
  e.radius = proportion_radius(e.value, samples);
  return e;
}

void to_json(json& j, const Estimate& e) {
  j = json{{"name", e.name}, {"n", e.n}, {"value", e.value}, {"sample_size", e.sample_size}, {"exact", e.exact}};
  j["radius"] = e.radius ? json(*e.radius) : json(nullptr);
  j["exact_value"] = e.exact_value ? json(*e.exact_value) : json(nullptr);
}

void from_json(const json& j, Estimate& e) {
  j.at("name").get_to(e.name);
  j.at("n").get_to(e.n);
  j.at("value").get_to(e.value);
  j.at("sample_size").get_to(e.sample_size);
  j.at("exact").get_to(e.exact);
  e.radius = j.at("radius").is_null() ? std::nullopt : std::optional<double>(j.at("radius").get<double>());
  e.exact_value =
      j.at("exact_value").is_null() ? std::nullopt : std::optional<std::string>(j.at("exact_value").get<std::string>());
}

void to_json(json& j, const CheckResult& c) {
  j = json{{"name", c.name}, {"status", to_string(c.status)}, {"hard", c.hard}, {"detail", c.detail}};
}

void from_json(const json& j, CheckResult& c) {
  j.at("name").get_to(c.name);
  c.status = check_status_from_string(j.at("status").get<std::string>());
  j.at("hard").get_to(c.hard);
  j.at("detail").get_to(c.detail);
}

void to_json(json& j, const Series& s) {
  j = json{{"name", s.name}, {"x", s.x_label}, {"y", s.y_label}, {"points", s.points}};
}

void from_json(const json& j, Series& s) {
  j.at("name").get_to(s.name);
  j.at("x").get_to(s.x_label);
  j.at("y").get_to(s.y_label);
  j.at("points").get_to(s.points);
}

void to_json(json& j, const ExperimentReport& r) {
  j = json{{"schema_version", r.schema_version},
           {"tool_version", r.tool_version},
           {"kind", r.kind},
           {"config", r.config},
           {"estimates", r.estimates},
           {"checks", r.checks},
           {"series", r.series},
           {"details", r.details}};
  if (r.wall_seconds) j["wall_seconds"] = *r.wall_seconds;
}

void from_json(const json& j, ExperimentReport& r) {
  j.at("schema_version").get_to(r.schema_version);
  j.at("tool_version").get_to(r.tool_version);
  j.at("kind").get_to(r.kind);
  r.config = j.at("config");
  j.at("estimates").get_to(r.estimates);
  j.at("checks").get_to(r.checks);
  j.at("series").get_to(r.series);
  r.details = j.at("details");
  r.wall_seconds = j.contains("wall_seconds") ? std::optional<double>(j.at("wall_seconds").get<double>()) : std::nullopt;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string number(double x) {
  // Same shortest round-trip formatting as the JSON output.
  return json(x).dump();
}

}  // namespace

std::string emit_report(const ExperimentReport& report, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json:
      os << json(report).dump(2) << '\n';
      break;
    case OutputFormat::csv:
      os << "kind,name,n,value,radius,sample_size,exact,exact_value\n";
      for (const auto& e : report.estimates) {
        os << csv_field(report.kind) << ',' << csv_field(e.name) << ',' << e.n << ',' << number(e.value) << ','
           << (e.radius ? number(*e.radius) : "") << ',' << e.sample_size << ',' << (e.exact ? "true" : "false") << ','
           << (e.exact_value ? csv_field(*e.exact_value) : "") << '\n';
      }
      break;
    case OutputFormat::plotdata:
      for (const auto& s : report.series) {
        os << "# series " << s.name << '\n' << "# " << s.x_label << ' ' << s.y_label << '\n';
        for (const auto& [x, y] : s.points) os << number(x) << ' ' << number(y) << '\n';
        os << "\n\n";
      }
      break;
  }
  return os.str();
}

void write_report(const ExperimentReport& report, OutputFormat format, const std::string& path) {
  const std::string text = emit_report(report, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace intransitive

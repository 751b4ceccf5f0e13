#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intransitive/die.hpp"
#include "intransitive/report.hpp"
#include "intransitive/rng.hpp"

namespace intransitive {

enum class ExperimentKind { sample, beats, enumerate, ties, transitivity, tournament, clt };

std::string to_string(ExperimentKind kind);
ExperimentKind kind_from_string(const std::string& name);

enum class SamplerChoice { automatic, rejection, exact };

std::string to_string(SamplerChoice sampler);
SamplerChoice sampler_from_string(const std::string& name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::ties;
  std::vector<int> n = {30};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  Model model = Model::balanced_sequence;
  SamplerChoice sampler = SamplerChoice::automatic;
  int threads = 1;
  std::string out;
  OutputFormat format = OutputFormat::json;

  int m = 200;                       // tournament: number of dice
  std::vector<int> k = {3, 4};       // tournament: pattern sizes
  double epsilon = 0.1;              // tournament: out-degree window
  int grid = 33;                     // clt: characteristic-function grid points per axis
  std::vector<double> tail_c = {1.0, 1.5};  // clt: tail constants
  bool exact = false;                // add exact enumeration values where the caps allow
  bool timing = false;               // include wall time (breaks byte-identical output)
  std::string die_a;                 // beats
  std::string die_b;                 // beats

  bool operator==(const ExperimentConfig&) const = default;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const ExperimentConfig& cfg);

void to_json(nlohmann::json& j, const ExperimentConfig& cfg);
void from_json(const nlohmann::json& j, ExperimentConfig& cfg);

/// The part of the config echoed into reports: everything that can change the
/// results, without threads, output path or output format.
nlohmann::json config_echo(const ExperimentConfig& cfg);

/// RNG stream index for trial `trial` at side count n. Streams never overlap across n.
std::uint64_t stream_for(int n, std::uint64_t trial);

/// Draws one die with the configured model and sampler.
Die draw_die(int n, const ExperimentConfig& cfg, RngStream& rng);

struct TripleOutcome {
  bool chain = false;   // A beats B and B beats C
  bool closed = false;  // chain and A beats C
};

TripleOutcome classify_triple(const Die& a, const Die& b, const Die& c);

struct ConditionalEstimate {
  std::uint64_t chains = 0;
  std::uint64_t closed = 0;
  bool defined() const { return chains > 0; }
  double value() const { return chains ? static_cast<double>(closed) / static_cast<double>(chains) : 0.0; }
};

ConditionalEstimate tally_triples(const std::vector<TripleOutcome>& outcomes);

ExperimentReport run_sample(const ExperimentConfig& cfg);
ExperimentReport run_beats(const ExperimentConfig& cfg);
ExperimentReport run_enumerate(const ExperimentConfig& cfg);
ExperimentReport run_ties(const ExperimentConfig& cfg);
ExperimentReport run_transitivity(const ExperimentConfig& cfg);
ExperimentReport run_tournament(const ExperimentConfig& cfg);
ExperimentReport run_clt(const ExperimentConfig& cfg);

/// Dispatches on cfg.kind; validates first.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace intransitive

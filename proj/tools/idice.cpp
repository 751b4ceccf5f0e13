#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "intransitive/experiments.hpp"

using namespace intransitive;

namespace {

struct Options {
  ExperimentConfig cfg;
  std::string model = "balanced";
  std::string sampler = "auto";
  std::string format = "json";
};

CLI::App* add_kind(CLI::App& app, Options& o, ExperimentKind kind, const std::string& help) {
  CLI::App* sub = app.add_subcommand(to_string(kind), help);
  sub->callback([&o, kind] { o.cfg.kind = kind; });
  sub->add_option("--n", o.cfg.n, "Side counts, comma separated")->delimiter(',');
  sub->add_option("--trials", o.cfg.trials, "Monte Carlo trials per n");
  sub->add_option("--seed", o.cfg.seed, "Base RNG seed");
  sub->add_option("--model", o.model, "Die model")->check(CLI::IsMember({"balanced", "multiset"}));
  sub->add_option("--sampler", o.sampler, "Sampler")->check(CLI::IsMember({"auto", "rejection", "exact"}));
  sub->add_option("--threads", o.cfg.threads, "Worker threads (results do not depend on it)");
  sub->add_option("--out", o.cfg.out, "Output path, '-' for stdout");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "plotdata"}));
  sub->add_flag("--exact", o.cfg.exact, "Add exact enumeration values where feasible");
  sub->add_flag("--timing", o.cfg.timing, "Record wall time in the report");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments on random balanced dice"};
  app.require_subcommand(1);
  Options o;

  add_kind(app, o, ExperimentKind::sample, "Draw random dice");
  CLI::App* beats_cmd = add_kind(app, o, ExperimentKind::beats, "Compare two explicit dice");
  beats_cmd->add_option("--a", o.cfg.die_a, "Faces of A, e.g. 1,1,4,4")->required();
  beats_cmd->add_option("--b", o.cfg.die_b, "Faces of B")->required();
  add_kind(app, o, ExperimentKind::enumerate, "Enumerate dice and exact statistics for small n");
  add_kind(app, o, ExperimentKind::ties, "Tie frequency of random pairs");
  add_kind(app, o, ExperimentKind::transitivity, "P[A beats C | A beats B, B beats C]");
  CLI::App* tour = add_kind(app, o, ExperimentKind::tournament, "Tournament of m random dice");
  tour->add_option("--m", o.cfg.m, "Number of dice");
  tour->add_option("--k", o.cfg.k, "Pattern sizes (3,4)")->delimiter(',');
  tour->add_option("--epsilon", o.cfg.epsilon, "Out-degree window around 1/2");
  CLI::App* clt = add_kind(app, o, ExperimentKind::clt, "Local limit diagnostics per die");
  clt->add_option("--grid", o.cfg.grid, "Characteristic function grid points per axis");
  clt->add_option("--tail-c", o.cfg.tail_c, "Tail constants")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    o.cfg.model = model_from_string(o.model);
    o.cfg.sampler = sampler_from_string(o.sampler);
    o.cfg.format = format_from_string(o.format);
    const ExperimentReport report = run_experiment(o.cfg);
    write_report(report, o.cfg.format, o.cfg.out);
    if (report.has_hard_failure()) {
      std::cerr << "idice: a hard check failed\n";
      return 3;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "idice: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "idice: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

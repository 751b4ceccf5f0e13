#include "intransitive/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>

#include "intransitive/enumeration.hpp"
#include "intransitive/fourier.hpp"
#include "intransitive/parallel.hpp"
#include "intransitive/samplers.hpp"
#include "intransitive/tournament.hpp"

namespace intransitive {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxListedDice = 1000;

template <typename Enum, std::size_t N>
Enum parse_enum(const std::string& name, const std::array<Enum, N>& values, const char* what) {
  for (Enum v : values)
    if (to_string(v) == name) return v;
  throw std::invalid_argument(std::string("unknown ") + what + " '" + name + "'");
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::sample:
      return "sample";
    case ExperimentKind::beats:
      return "beats";
    case ExperimentKind::enumerate:
      return "enumerate";
    case ExperimentKind::ties:
      return "ties";
    case ExperimentKind::transitivity:
      return "transitivity";
    case ExperimentKind::tournament:
      return "tournament";
    case ExperimentKind::clt:
      return "clt";
  }
  return "ties";
}

ExperimentKind kind_from_string(const std::string& name) {
  return parse_enum(name,
                    std::array{ExperimentKind::sample, ExperimentKind::beats, ExperimentKind::enumerate,
                               ExperimentKind::ties, ExperimentKind::transitivity, ExperimentKind::tournament,
                               ExperimentKind::clt},
                    "experiment kind");
}

std::string to_string(SamplerChoice sampler) {
  switch (sampler) {
    case SamplerChoice::automatic:
      return "auto";
    case SamplerChoice::rejection:
      return "rejection";
    case SamplerChoice::exact:
      return "exact";
  }
  return "auto";
}

SamplerChoice sampler_from_string(const std::string& name) {
  return parse_enum(name, std::array{SamplerChoice::automatic, SamplerChoice::rejection, SamplerChoice::exact},
                    "sampler");
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.n.empty()) throw std::invalid_argument("n: at least one side count is required");
  for (int n : cfg.n)
    if (n < 1) throw std::invalid_argument("n: side counts must be >= 1 (got " + std::to_string(n) + ")");
  if (cfg.trials < 1) throw std::invalid_argument("trials: must be >= 1");
  if (cfg.threads < 1) throw std::invalid_argument("threads: must be >= 1");
  if (cfg.m < 1) throw std::invalid_argument("m: must be >= 1");
  for (int k : cfg.k)
    if (k != 3 && k != 4) throw std::invalid_argument("k: pattern sizes must be 3 or 4");
  if (!(cfg.epsilon >= 0 && cfg.epsilon <= 0.5)) throw std::invalid_argument("epsilon: must lie in [0, 0.5]");
  if (cfg.grid < 2) throw std::invalid_argument("grid: need at least 2 points per axis");
  for (double c : cfg.tail_c)
    if (!(c > 0)) throw std::invalid_argument("tail_c: constants must be positive");
  if (cfg.sampler == SamplerChoice::rejection && cfg.model == Model::multiset_canonical)
    throw std::invalid_argument("sampler: rejection sampling is only defined for the balanced model");
  if (cfg.kind == ExperimentKind::beats && (cfg.die_a.empty() || cfg.die_b.empty()))
    throw std::invalid_argument("beats: both --a and --b are required");
}

void to_json(json& j, const ExperimentConfig& cfg) {
  j = config_echo(cfg);
  j["threads"] = cfg.threads;
  j["out"] = cfg.out;
  j["format"] = to_string(cfg.format);
}

void from_json(const json& j, ExperimentConfig& cfg) {
  cfg.kind = kind_from_string(j.at("kind").get<std::string>());
  j.at("n").get_to(cfg.n);
  j.at("trials").get_to(cfg.trials);
  j.at("seed").get_to(cfg.seed);
  cfg.model = model_from_string(j.at("model").get<std::string>());
  cfg.sampler = sampler_from_string(j.at("sampler").get<std::string>());
  j.at("m").get_to(cfg.m);
  j.at("k").get_to(cfg.k);
  j.at("epsilon").get_to(cfg.epsilon);
  j.at("grid").get_to(cfg.grid);
  j.at("tail_c").get_to(cfg.tail_c);
  j.at("exact").get_to(cfg.exact);
  j.at("timing").get_to(cfg.timing);
  j.at("a").get_to(cfg.die_a);
  j.at("b").get_to(cfg.die_b);
  cfg.threads = j.value("threads", 1);
  cfg.out = j.value("out", std::string());
  cfg.format = format_from_string(j.value("format", std::string("json")));
}

json config_echo(const ExperimentConfig& cfg) {
  return json{{"kind", to_string(cfg.kind)},
              {"n", cfg.n},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"model", to_string(cfg.model)},
              {"sampler", to_string(cfg.sampler)},
              {"m", cfg.m},
              {"k", cfg.k},
              {"epsilon", cfg.epsilon},
              {"grid", cfg.grid},
              {"tail_c", cfg.tail_c},
              {"exact", cfg.exact},
              {"timing", cfg.timing},
              {"a", cfg.die_a},
              {"b", cfg.die_b},
              {"rng", RngStream::generator_name}};
}

std::uint64_t stream_for(int n, std::uint64_t trial) { return (static_cast<std::uint64_t>(n) << 40) | trial; }

Die draw_die(int n, const ExperimentConfig& cfg, RngStream& rng) {
  switch (cfg.sampler) {
    case SamplerChoice::rejection:
      return sample_balanced_rejection(n, rng).die;
    case SamplerChoice::exact:
      return cfg.model == Model::multiset_canonical ? sample_multiset(n, rng) : sample_balanced_exact(n, rng);
    case SamplerChoice::automatic:
      break;
  }
  return sample_die(n, cfg.model, rng);
}

TripleOutcome classify_triple(const Die& a, const Die& b, const Die& c) {
  TripleOutcome out;
  out.chain = beats_strictly(a, b) && beats_strictly(b, c);
  out.closed = out.chain && beats_strictly(a, c);
  return out;
}

ConditionalEstimate tally_triples(const std::vector<TripleOutcome>& outcomes) {
  ConditionalEstimate e;
  for (const auto& o : outcomes) {
    e.chains += o.chain;
    e.closed += o.closed;
  }
  return e;
}

namespace {

ExperimentReport new_report(const ExperimentConfig& cfg) {
  ExperimentReport r;
  r.kind = to_string(cfg.kind);
  r.config = config_echo(cfg);
  return r;
}

Estimate exact_estimate(std::string name, int n, const Rational& value) {
  Estimate e;
  e.name = std::move(name);
  e.n = n;
  e.value = to_double(value);
  e.exact = true;
  e.exact_value = to_string(value);
  return e;
}

CheckResult check(std::string name, bool ok, bool hard, std::string detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, hard, std::move(detail)};
}

json faces_json(const Die& d) { return json(std::vector<int>(d.faces().begin(), d.faces().end())); }

double median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

bool strictly_decreasing(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] < xs[i - 1])) return false;
  return true;
}

std::string fmt(double x) { return json(x).dump(); }

}  // namespace

ExperimentReport run_sample(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  json per_n = json::array();
  for (int n : cfg.n) {
    std::vector<std::optional<Die>> dice(cfg.trials);
    std::vector<SamplerStats> stats(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
      RngStream rng(cfg.seed, stream_for(n, t));
      if (cfg.sampler == SamplerChoice::rejection) {
        auto s = sample_balanced_rejection(n, rng);
        stats[t] = s.stats;
        dice[t] = std::move(s.die);
      } else {
        dice[t] = draw_die(n, cfg, rng);
      }
    });
    json entry{{"n", n}, {"count", cfg.trials}};
    json listed = json::array();
    for (std::size_t t = 0; t < dice.size() && t < kMaxListedDice; ++t) listed.push_back(faces_json(*dice[t]));
    entry["dice"] = listed;
    entry["truncated"] = dice.size() > kMaxListedDice;
    if (cfg.sampler == SamplerChoice::rejection) {
      SamplerStats total;
      for (const auto& s : stats) total += s;
      report.estimates.push_back(monte_carlo_estimate("acceptance_rate", n, total.accepts, total.attempts));
      const double lower = std::pow(static_cast<double>(n), -1.5) / 4.0;
      report.checks.push_back(check("acceptance_rate_lower_bound", total.acceptance_rate() >= lower, false,
                                    "n=" + std::to_string(n) + " observed " + fmt(total.acceptance_rate()) +
                                        " >= n^-3/2/4 = " + fmt(lower)));
      entry["attempts"] = total.attempts;
      entry["accepts"] = total.accepts;
    }
    per_n.push_back(entry);
  }
  report.details["samples"] = per_n;
  return report;
}

ExperimentReport run_beats(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  const Die a = parse_die(cfg.die_a, cfg.model);
  const Die b = parse_die(cfg.die_b, cfg.model);
  const BeatOutcome fast = beats(a, b);
  const BeatOutcome slow = beats_reference(a, b);
  const HalfInteger score = score_sum(a, b);
  const Die ca = complement(a), cb = complement(b);
  const BeatOutcome dual = beats(cb, ca);

  report.details = json{{"a", faces_json(a)},
                        {"b", faces_json(b)},
                        {"greater", fast.greater},
                        {"less", fast.less},
                        {"equal", fast.equal},
                        {"verdict", to_string(fast.verdict)},
                        {"score_sum_doubled", score.doubled()},
                        {"score_sum", score.value()},
                        {"complement_a", faces_json(ca)},
                        {"complement_b", faces_json(cb)},
                        {"complement_verdict", to_string(dual.verdict)}};
  report.checks.push_back(check("merge_matches_reference", fast == slow, true, "O(n) merge vs O(n^2) pair count"));
  report.checks.push_back(check("score_sum_sign", verdict_from_score(score) == fast.verdict, true,
                                "sum_j g_A(b_j) < 0 iff A beats B"));
  report.checks.push_back(
      check("complement_duality", (fast.verdict == Verdict::a_wins) == (dual.verdict == Verdict::a_wins), true,
            "A beats B iff complement(B) beats complement(A)"));
  return report;
}

ExperimentReport run_enumerate(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  json per_n = json::array();
  for (int n : cfg.n) {
    json entry{{"n", n}, {"balanced_count", to_string(count_balanced(n))}};
    if (n <= kEnumerationCap) {
      const auto dice = enumerate_multiset(n);
      entry["multiset_count"] = dice.size();
      json listed = json::array();
      for (std::size_t i = 0; i < dice.size() && i < kMaxListedDice; ++i) listed.push_back(faces_json(dice[i]));
      entry["multiset_dice"] = listed;
      entry["truncated"] = dice.size() > kMaxListedDice;
    } else {
      report.checks.push_back({"enumerate_multiset", CheckStatus::vacuous, false,
                               "n=" + std::to_string(n) + " above enumeration cap " + std::to_string(kEnumerationCap)});
    }
    if (cfg.exact && n <= kPairwiseCap) {
      const ExactCensus census = exact_pairwise_stats(n, cfg.model);
      report.estimates.push_back(exact_estimate("tie_probability", n, census.tie_probability));
      report.checks.push_back(check("score_sum_reduction", census.score_sum_agrees, true,
                                    "n=" + std::to_string(n) + " beat fractions agree via pair counts and score sums"));
      json standings = json::array();
      for (const auto& s : census.standings) {
        standings.push_back(json{{"die", faces_json(s.die)},
                                 {"weight", to_string(s.weight)},
                                 {"beats", to_string(s.beats)},
                                 {"ties", to_string(s.ties)},
                                 {"loses", to_string(s.loses)}});
      }
      entry["standings"] = standings;
    }
    if (cfg.exact && n <= kTripleCap) {
      const auto triple = exact_triple_stats(n, cfg.model);
      if (triple) {
        report.estimates.push_back(exact_estimate("p_a_beats_c_given_chain", n, *triple));
      } else {
        report.checks.push_back({"p_a_beats_c_given_chain", CheckStatus::undefined, false,
                                 "n=" + std::to_string(n) + ": no A beats B beats C chains"});
      }
    }
    per_n.push_back(entry);
  }
  report.details["enumerations"] = per_n;
  return report;
}

ExperimentReport run_ties(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  Series series{"tie_frequency", "n", "tie_frequency", {}};
  std::vector<double> freqs;
  for (int n : cfg.n) {
    std::vector<Verdict> verdicts(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
      RngStream rng(cfg.seed, stream_for(n, t));
      const Die a = draw_die(n, cfg, rng);
      const Die b = draw_die(n, cfg, rng);
      verdicts[t] = beats(a, b).verdict;
    });
    const auto ties = static_cast<std::uint64_t>(std::count(verdicts.begin(), verdicts.end(), Verdict::tie));
    const auto wins = static_cast<std::uint64_t>(std::count(verdicts.begin(), verdicts.end(), Verdict::a_wins));
    const Estimate tie_est = monte_carlo_estimate("tie_frequency", n, ties, cfg.trials);
    report.estimates.push_back(tie_est);
    report.estimates.push_back(monte_carlo_estimate("a_wins_frequency", n, wins, cfg.trials));
    series.points.emplace_back(n, tie_est.value);
    freqs.push_back(tie_est.value);

    if (cfg.exact && n <= kPairwiseCap) {
      const ExactCensus census = exact_pairwise_stats(n, cfg.model);
      const Estimate ex = exact_estimate("tie_probability", n, census.tie_probability);
      report.estimates.push_back(ex);
      report.checks.push_back(check("monte_carlo_vs_exact", std::abs(tie_est.value - ex.value) <= *tie_est.radius, false,
                                    "n=" + std::to_string(n) + " |" + fmt(tie_est.value) + " - " + fmt(ex.value) +
                                        "| <= 99% radius " + fmt(*tie_est.radius)));
    }
  }
  if (freqs.size() > 1) {
    report.checks.push_back(check("tie_frequency_strictly_decreasing", strictly_decreasing(freqs), false,
                                  "tie frequency decreases over the given n sequence"));
  }
  report.series.push_back(series);
  return report;
}

ExperimentReport run_transitivity(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  Series series{"p_a_beats_c_given_chain", "n", "estimate", {}};
  for (int n : cfg.n) {
    std::vector<TripleOutcome> outcomes(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
      RngStream rng(cfg.seed, stream_for(n, t));
      const Die a = draw_die(n, cfg, rng);
      const Die b = draw_die(n, cfg, rng);
      const Die c = draw_die(n, cfg, rng);
      outcomes[t] = classify_triple(a, b, c);
    });
    const ConditionalEstimate tally = tally_triples(outcomes);
    report.estimates.push_back(monte_carlo_estimate("chain_frequency", n, tally.chains, cfg.trials));
    if (tally.defined()) {
      const Estimate est = monte_carlo_estimate("p_a_beats_c_given_chain", n, tally.closed, tally.chains);
      report.estimates.push_back(est);
      series.points.emplace_back(n, est.value);
    } else {
      report.checks.push_back({"p_a_beats_c_given_chain", CheckStatus::undefined, false,
                               "n=" + std::to_string(n) + ": conditioning event never occurred"});
    }
    if (cfg.exact && n <= kTripleCap) {
      const auto exact = exact_triple_stats(n, cfg.model);
      if (exact) {
        report.estimates.push_back(exact_estimate("p_a_beats_c_given_chain_exact", n, *exact));
      } else {
        report.checks.push_back({"p_a_beats_c_given_chain_exact", CheckStatus::undefined, false,
                                 "n=" + std::to_string(n) + ": conditioning event has probability zero"});
      }
    }
  }
  report.series.push_back(series);
  return report;
}

ExperimentReport run_tournament(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  json per_n = json::array();
  for (int n : cfg.n) {
    std::vector<std::optional<Die>> drawn(static_cast<std::size_t>(cfg.m));
    parallel_for(drawn.size(), cfg.threads, [&](std::size_t i) {
      RngStream rng(cfg.seed, stream_for(n, i));
      drawn[i] = draw_die(n, cfg, rng);
    });
    std::vector<Die> dice;
    dice.reserve(drawn.size());
    for (auto& d : drawn) dice.push_back(std::move(*d));
    const Tournament t = Tournament::from_dice(dice, cfg.threads);
    const TripleCensus census = triple_census(t);
    const DegreeSummary degrees = outdegree_concentration(t, cfg.epsilon);
    const Path2Check path2 = path2_identity_check(t);

    const std::uint64_t complete = census.transitive + census.intransitive;
    report.estimates.push_back(monte_carlo_estimate("intransitive_fraction", n, census.intransitive, complete));
    const std::uint64_t pairs = static_cast<std::uint64_t>(cfg.m) * (cfg.m - 1) / 2;
    report.estimates.push_back(monte_carlo_estimate("tie_pair_fraction", n, t.tie_count(), pairs));
    report.estimates.push_back(monte_carlo_estimate(
        "outdegree_concentrated_fraction", n,
        static_cast<std::uint64_t>(std::llround(degrees.concentrated_fraction * cfg.m)), static_cast<std::uint64_t>(cfg.m)));

    if (path2.tie_free) {
      report.checks.push_back(check("path2_identity", path2.holds, true,
                                    "sum d+d- = " + std::to_string(path2.degree_products) + ", paths = " +
                                        std::to_string(path2.directed_paths)));
    } else {
      report.checks.push_back({"path2_identity", CheckStatus::reported, false,
                               "near tournament with " + std::to_string(t.tie_count()) +
                                   " tie pairs: paths = " + std::to_string(path2.directed_paths) +
                                   ", sum d+d- = " + std::to_string(path2.degree_products)});
    }

    json patterns = json::array();
    for (int k : cfg.k) {
      const PatternFrequencies pf = pattern_frequencies(t, k);
      json classes = json::array();
      for (const auto& pc : pf.classes) {
        const Estimate e = monte_carlo_estimate("pattern_k" + std::to_string(k) + "_" + pc.name, n, pc.observed, pf.subsets);
        report.estimates.push_back(e);
        classes.push_back(json{{"class", pc.name},
                               {"labeled_count", pc.labeled_count},
                               {"reference", pc.reference},
                               {"observed", pc.observed},
                               {"frequency", pc.frequency}});
      }
      patterns.push_back(json{{"k", k}, {"subsets", pf.subsets}, {"skipped", pf.skipped}, {"classes", classes}});
    }

    std::vector<int> outdeg(cfg.m);
    for (int v = 0; v < cfg.m; ++v) outdeg[v] = t.out_degree(v);
    Series degree_series{"outdegree_ratio_n" + std::to_string(n), "rank", "outdegree_over_m_minus_1", {}};
    std::vector<int> sorted = outdeg;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      degree_series.points.emplace_back(static_cast<double>(i),
                                        cfg.m > 1 ? static_cast<double>(sorted[i]) / (cfg.m - 1) : 0.0);
    report.series.push_back(degree_series);

    per_n.push_back(json{{"n", n},
                         {"m", cfg.m},
                         {"edges", t.edge_count()},
                         {"tie_pairs", t.tie_count()},
                         {"census", json{{"transitive", census.transitive},
                                         {"intransitive", census.intransitive},
                                         {"incomplete", census.incomplete},
                                         {"total", census.total}}},
                         {"outdegree", json{{"mean", degrees.mean},
                                            {"variance", degrees.variance},
                                            {"epsilon", degrees.epsilon},
                                            {"concentrated_fraction", degrees.concentrated_fraction}}},
                         {"path2", json{{"directed_paths", path2.directed_paths},
                                        {"degree_products", path2.degree_products},
                                        {"triangles", path2.triangles},
                                        {"directed_triangles", path2.directed_triangles},
                                        {"tie_free", path2.tie_free}}},
                         {"patterns", patterns},
                         {"incomplete_note", "triples touching a tie are excluded from the intransitive fraction"}});
  }
  report.details["tournaments"] = per_n;
  return report;
}

namespace {

struct CltDieResult {
  json record;
  bool maxnorm_pass = false;
  bool modulus_ok = true;
  CheckStatus box = CheckStatus::vacuous;
  bool convolved = false;
  bool degenerate = false;
  double symmetry = 0;
  double tie = 0;
  double mode_error = 0;
  int tails_applicable = 0;
  int tails_failed = 0;
  std::optional<bool> matches_enumeration;
};

json conditional_json(const ConditionalBeat& cb) {
  return json{{"a_beats", to_string(cb.a_beats)},
              {"tie", to_string(cb.tie)},
              {"b_beats", to_string(cb.b_beats)},
              {"a_beats_value", to_double(cb.a_beats)},
              {"tie_value", to_double(cb.tie)},
              {"b_beats_value", to_double(cb.b_beats)},
              {"balanced_count", to_string(cb.balanced_count)}};
}

CltDieResult clt_for_die(const Die& die, const ExperimentConfig& cfg, const ExactCensus* census) {
  CltDieResult r;
  const int n = die.sides();
  r.record["die"] = faces_json(die);
  if (n >= 2) {
    const MaxNormCheck mn = maxnorm_check(die);
    r.maxnorm_pass = mn.passes;
    r.record["maxnorm"] = json{{"max_abs_g", mn.max_abs_g.value()}, {"bound", mn.bound}, {"passes", mn.passes}};
  }
  BoxBoundOptions opts;
  opts.grid = cfg.grid;
  const BoxBoundReport box = box_bound_report(die, opts);
  r.modulus_ok = box.modulus_bounded;
  r.box = box.vacuous ? CheckStatus::vacuous : (box.holds ? CheckStatus::pass : CheckStatus::fail);
  r.record["box_bound"] = json{{"alpha_threshold", box.alpha_threshold},
                               {"beta_threshold", box.beta_threshold},
                               {"bound", box.bound},
                               {"vacuous", box.vacuous},
                               {"points_outside", box.points_outside},
                               {"max_outside", box.max_outside},
                               {"slack", box.slack},
                               {"max_modulus", box.max_modulus}};
  if (n > kConvolutionCap) {
    r.record["convolution"] = "skipped: n above cap " + std::to_string(kConvolutionCap);
    return r;
  }
  const ExactPmf pmf = convolve_exact(die);
  r.convolved = true;
  const ConditionalBeat cb = conditional_beat_prob(pmf);
  r.tie = to_double(cb.tie);
  r.record["conditional_beat"] = conditional_json(cb);
  if (census) {
    bool match = false;
    for (const auto& s : census->standings) {
      if (std::equal(s.die.faces().begin(), s.die.faces().end(), die.sorted_faces().begin())) {
        match = s.beats == cb.a_beats && s.ties == cb.tie && s.loses == cb.b_beats;
        break;
      }
    }
    r.matches_enumeration = match;
    r.record["matches_enumeration"] = match;
  }
  const GaussianFit fit = gaussian_compare(pmf);
  r.degenerate = fit.degenerate;
  r.symmetry = fit.symmetry_defect_normalized;
  r.mode_error = fit.mode_relative_error;
  r.record["gaussian"] = json{{"degenerate", fit.degenerate},
                              {"covariance", {fit.covariance(0, 0), fit.covariance(0, 1), fit.covariance(1, 1)}},
                              {"conditional_variance", fit.conditional_variance},
                              {"p_v0", fit.p_v0},
                              {"row_step_doubled", fit.row_step},
                              {"row_scale", fit.row_scale},
                              {"sup_error_row", fit.sup_error_row},
                              {"sup_error_plane", fit.sup_error_plane},
                              {"mode_u", fit.mode_u},
                              {"mode_relative_error", fit.mode_relative_error},
                              {"symmetry_defect", fit.symmetry_defect},
                              {"symmetry_defect_normalized", fit.symmetry_defect_normalized},
                              {"reference_bound", fit.reference_bound}};
  json tails = json::array();
  for (double c : cfg.tail_c) {
    const TailCheck tc = tail_check(pmf, die, c);
    if (tc.applicable) {
      ++r.tails_applicable;
      if (!tc.holds) ++r.tails_failed;
    }
    tails.push_back(json{{"c", c},
                         {"threshold", tc.threshold},
                         {"tail_count", to_string(tc.tail_count)},
                         {"tail_probability", tc.tail_probability},
                         {"bound", tc.bound},
                         {"applicable", tc.applicable},
                         {"holds", tc.holds}});
  }
  r.record["tails"] = tails;
  return r;
}

}  // namespace

ExperimentReport run_clt(const ExperimentConfig& cfg) {
  ExperimentReport report = new_report(cfg);
  Series symmetry_series{"median_symmetry_defect_normalized", "n", "median", {}};
  Series tie_series{"median_conditional_tie_probability", "n", "median", {}};
  std::vector<double> symmetry_medians;
  json per_n = json::array();
  for (int n : cfg.n) {
    std::optional<ExactCensus> census;
    if (n <= kPairwiseCap && cfg.model == Model::balanced_sequence && n <= kConvolutionCap)
      census = exact_pairwise_stats(n, Model::balanced_sequence);

    std::vector<CltDieResult> results(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
      RngStream rng(cfg.seed, stream_for(n, t));
      results[t] = clt_for_die(draw_die(n, cfg, rng), cfg, census ? &*census : nullptr);
    });

    int maxnorm_fail = 0, modulus_fail = 0, box_vacuous = 0, box_pass = 0, box_fail = 0;
    int tails_applicable = 0, tails_failed = 0, enum_checked = 0, enum_mismatch = 0, degenerate = 0;
    std::vector<double> symmetry, ties, mode_errors;
    json dice = json::array();
    for (const auto& r : results) {
      if (n >= 2 && !r.maxnorm_pass) ++maxnorm_fail;
      if (!r.modulus_ok) ++modulus_fail;
      box_vacuous += r.box == CheckStatus::vacuous;
      box_pass += r.box == CheckStatus::pass;
      box_fail += r.box == CheckStatus::fail;
      tails_applicable += r.tails_applicable;
      tails_failed += r.tails_failed;
      if (r.matches_enumeration) {
        ++enum_checked;
        enum_mismatch += !*r.matches_enumeration;
      }
      if (r.convolved) {
        ties.push_back(r.tie);
        if (r.degenerate) {
          ++degenerate;
        } else {
          symmetry.push_back(r.symmetry);
          mode_errors.push_back(r.mode_error);
        }
      }
      dice.push_back(r.record);
    }
    const std::string at = "n=" + std::to_string(n) + ": ";
    if (n >= 2) {
      report.estimates.push_back(monte_carlo_estimate("maxnorm_failure_fraction", n, maxnorm_fail, cfg.trials));
    }
    report.checks.push_back(check("char_fn_modulus_bounded", modulus_fail == 0, true,
                                  at + std::to_string(modulus_fail) + " dice with |f^| > 1"));
    {
      CheckResult box{"box_bound", CheckStatus::reported, false,
                      at + std::to_string(box_vacuous) + " vacuous, " + std::to_string(box_pass) + " hold, " +
                          std::to_string(box_fail) + " exceed n^-10 outside the box"};
      if (box_vacuous == static_cast<int>(cfg.trials)) box.status = CheckStatus::vacuous;
      report.checks.push_back(box);
    }
    if (n <= kConvolutionCap) {
      report.checks.push_back(check("tail_inequality", tails_failed == 0, true,
                                    at + std::to_string(tails_applicable - tails_failed) + "/" +
                                        std::to_string(tails_applicable) + " applicable tail checks hold"));
      if (census) {
        report.checks.push_back(check("conditional_beat_matches_enumeration", enum_mismatch == 0, true,
                                      at + std::to_string(enum_checked - enum_mismatch) + "/" +
                                          std::to_string(enum_checked) + " dice match exactly"));
      }
      const double sym = median(symmetry);
      const double tie = median(ties);
      symmetry_medians.push_back(sym);
      symmetry_series.points.emplace_back(n, sym);
      tie_series.points.emplace_back(n, tie);
      per_n.push_back(json{{"n", n},
                           {"median_symmetry_defect_normalized", sym},
                           {"median_tie_probability", tie},
                           {"median_mode_relative_error", median(mode_errors)},
                           {"degenerate_fits", degenerate},
                           {"dice", dice}});
    } else {
      report.checks.push_back({"exact_convolution", CheckStatus::vacuous, false,
                               at + "above convolution cap " + std::to_string(kConvolutionCap)});
      per_n.push_back(json{{"n", n}, {"dice", dice}});
    }
  }
  if (symmetry_medians.size() > 1) {
    report.checks.push_back(check("symmetry_defect_decreasing", strictly_decreasing(symmetry_medians), false,
                                  "median normalized symmetry defect decreases over the given n sequence"));
  }
  report.series.push_back(symmetry_series);
  report.series.push_back(tie_series);
  report.details["clt"] = per_n;
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  switch (cfg.kind) {
    case ExperimentKind::sample:
      report = run_sample(cfg);
      break;
    case ExperimentKind::beats:
      report = run_beats(cfg);
      break;
    case ExperimentKind::enumerate:
      report = run_enumerate(cfg);
      break;
    case ExperimentKind::ties:
      report = run_ties(cfg);
      break;
    case ExperimentKind::transitivity:
      report = run_transitivity(cfg);
      break;
    case ExperimentKind::tournament:
      report = run_tournament(cfg);
      break;
    case ExperimentKind::clt:
      report = run_clt(cfg);
      break;
  }
  if (cfg.timing) {
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace intransitive

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgd/temporal_graph.hpp"

namespace tgd {

// delta = 1, or delta = round(fraction * Tmax).
struct DeltaRule {
  std::optional<double> fraction;

  static DeltaRule one() { return {}; }
  static DeltaRule of_lifetime(double f) { return {f}; }
  // "one" or a decimal fraction such as "0.05".
  static DeltaRule parse(const std::string& text);

  std::string label() const;
  // Nullopt when rounding leaves delta below 1.
  std::optional<Time> resolve(Time lifetime) const;
};

struct SweepConfig {
  std::vector<std::size_t> nodes;
  std::vector<double> p;
  std::vector<double> tmax_ratio;
  std::vector<DeltaRule> delta_rules;
  std::size_t repetitions = 3;
  std::uint64_t seed = 1;
  bool skip_redundant = true;
  bool record_wall_time = false;
  // 0 means one worker per hardware thread.
  std::size_t threads = 0;

  // n in 5..100 step 5, the p and Tmax/n grids, delta = 1 and the five
  // lifetime fractions.
  static SweepConfig defaults();
  // Throws TgdError on empty grids, p outside [0, 1] or non-positive ratios.
  void validate() const;
};

// Flat `key = value` lines; list values are comma separated. Keys: nodes,
// p, tmax_ratio, delta_rules, repetitions, seed, skip_redundant,
// record_wall_time, threads. Missing keys keep their defaults; unknown keys
// are an error. `nodes` also accepts `a..b:step`.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

struct RunRecord {
  std::string source = "ert";
  std::size_t n = 0;
  double p = 0.0;
  double tmax_ratio = 0.0;
  std::string delta_rule;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  Time tmax = 0;
  Time delta = 0;
  std::size_t m = 0;
  std::size_t rounds_total = 0;
  std::size_t rounds_discovery = 0;
  std::size_t rounds_exploration = 0;
  std::size_t rounds_skipped = 0;
  std::size_t decc_count = 0;
  double decc_mean_size = 0.0;
  bool won = false;
  double wall_time = 0.0;

  double discovery_fraction() const;
};

struct SweepResult {
  std::vector<RunRecord> records;
  std::vector<std::string> warnings;
};

// Runs DiscoveryFollow against the honest adversary on `graph` and fills
// every field except the grid coordinates.
RunRecord run_instance(const TemporalGraph& graph, Time delta, bool skip_redundant,
                       bool record_wall_time = false);

// Every grid point and repetition, in grid order. Deterministic in the
// config; the worker count does not affect the output.
SweepResult run_sweep(const SweepConfig& config);

// Seed of one run, derived from the base seed, grid index and repetition.
std::uint64_t derive_seed(std::uint64_t base, std::size_t grid_index, std::size_t rep);

const std::vector<std::string>& csv_columns();
void write_csv(std::ostream& out, std::span<const RunRecord> records);
std::vector<RunRecord> read_csv(std::istream& in);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t count = 0;
};

// Least squares of rounds_total on m. Throws TgdError with fewer than 3
// records or when every m is equal.
LinearFit fit_rounds_vs_edges(std::span<const RunRecord> records);

struct StratumFit {
  double p;
  double tmax_ratio;
  LinearFit fit;
};

// One fit per (p, Tmax/n) stratum; degenerate strata are left out.
std::vector<StratumFit> fit_by_stratum(std::span<const RunRecord> records);

// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);

// Mean discovery fraction per p value, ascending in p. Records without
// rounds are left out.
std::vector<std::pair<double, double>> discovery_fraction_by_p(std::span<const RunRecord> records);

struct ThresholdBucket {
  double lower = 0.0;  // np / Tmax in [lower, upper)
  double upper = 0.0;
  std::size_t count = 0;
  double mean_discovery_fraction = 0.0;
  double mean_decc_size = 0.0;
  double mean_decc_per_edge = 0.0;
};

// Half-decade buckets of np / Tmax. Records with p = 0 or no rounds are
// left out; empty buckets are omitted.
std::vector<ThresholdBucket> threshold_report(std::span<const RunRecord> records);

// Aggregate over records with lower <= np / Tmax <= upper (same exclusions).
ThresholdBucket threshold_range(std::span<const RunRecord> records, double lower, double upper);

// Human-readable summary used by `tgd analyze`.
std::string analysis_report(std::span<const RunRecord> records);

}  // namespace tgd

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chainsim/world.hpp"

namespace chainsim {

// Cross-run mean or standard deviation of the per-iteration metrics.
struct MetricsStat {
  double mean_fitness = 0.0;
  double diversity = 0.0;
  double mean_chain_length = 0.0;
  double fraction_optimal_base = 0.0;
};

struct AggregatePoint {
  int iteration = 0;
  MetricsStat mean{};
  MetricsStat stddev{};  // population standard deviation across runs
};

// Per-iteration aggregate of several runs that share a config up to seed.
struct AggregateSeries {
  std::string condition_label;
  std::vector<AggregatePoint> points;
};

// One experiment condition: a label plus the toggles it overrides.
struct Condition {
  std::string label;
  bool chaining_enabled = true;
  bool learning_enabled = true;
};

struct ExperimentSpec {
  std::string name;  // fig3_fitness | fig4_diversity | fig5_learning_matrix
  int runs = 10;
  WorldConfig base_config{};
  std::vector<Condition> conditions;
  std::string chart_metric;  // metric plotted in the combined chart
};

// Executes `runs` seeded runs (seeds base_seed, base_seed + 1, ...) and
// aggregates them pointwise. `threads` > 1 distributes runs over worker
// threads; aggregation always happens in seed order, so the result is
// identical for any thread count.
AggregateSeries run_batch(const WorldConfig& config, int runs, std::uint64_t base_seed,
                          int threads = 1);

// Preset experiment specs; short_name is one of fig3, fig4, fig5.
// Conditions share the base seed, so paired conditions see the same seeds.
ExperimentSpec make_experiment(const std::string& short_name, int runs, std::uint64_t base_seed);

// Runs every condition, writes <out_dir>/<name>/<condition_label>.csv plus
// a combined <out_dir>/<name>/chart.svg, and returns the written paths.
std::vector<std::filesystem::path> run_experiment(const ExperimentSpec& spec,
                                                  const std::filesystem::path& out_dir,
                                                  int threads = 1);

// CSV with the fixed header
//   iteration,mean_fitness,fitness_stddev,diversity,diversity_stddev,
//   mean_chain_length,fraction_optimal_base
// one newline-terminated row per iteration. Byte-stable for equal input.
void write_csv(const AggregateSeries& series, const std::filesystem::path& path);
std::string csv_text(const AggregateSeries& series);

// SVG line chart, one polyline and one legend label per series. All series
// must be non-empty and equally long; metric must name a MetricsStat
// field. Violations throw std::invalid_argument.
void render_chart(const std::vector<AggregateSeries>& aggregates, const std::string& metric_name,
                  const std::filesystem::path& path);
std::string chart_svg(const std::vector<AggregateSeries>& aggregates,
                      const std::string& metric_name);

// Shortest decimal text that round-trips the value ("10.02", "1").
std::string format_number(double value);
// Same, but integral values keep one decimal ("2.0").
std::string format_decimal(double value);

}  // namespace chainsim

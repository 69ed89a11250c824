#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainsim/config.hpp"
#include "chainsim/errors.hpp"
#include "chainsim/harness.hpp"

namespace {

using namespace chainsim;

int cmd_run(const std::string& config_path, std::uint64_t seed, bool seed_given,
            const std::string& out_dir) {
  WorldConfig config;
  if (!config_path.empty()) config = load_config_file(config_path);
  if (seed_given || config_path.empty()) config.seed = seed;

  AggregateSeries series = run_batch(config, 1, config.seed);
  series.condition_label = "run";

  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw io_error("cannot create directory " + dir.string() + ": " + ec.message());
  const std::filesystem::path csv_path = dir / "run.csv";
  write_csv(series, csv_path);

  const AggregatePoint& last = series.points.back();
  std::cout << "wrote " << csv_path.string() << "\n";
  std::cout << "final mean fitness: " << format_decimal(last.mean.mean_fitness) << "\n";
  std::cout << "final diversity: " << format_number(last.mean.diversity) << "\n";
  return 0;
}

int cmd_experiment(const std::string& name, int runs, std::uint64_t base_seed,
                   const std::string& out_dir, int threads) {
  const ExperimentSpec spec = make_experiment(name, runs, base_seed);
  const auto manifest = run_experiment(spec, out_dir, threads);
  for (const auto& path : manifest) {
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

int cmd_oracle() {
  const auto steps = enumerate_steps();
  std::map<double, int> histogram;
  for (const Step& step : steps) ++histogram[fitness_step(step)];

  std::cout << "total actions: " << steps.size() << "\n";
  std::cout << "fitness histogram:\n";
  for (const auto& [fitness, count] : histogram) {
    std::cout << "  " << format_decimal(fitness) << ": " << count << "\n";
  }

  const auto optima = optimal_steps();
  std::cout << "maximum fitness: " << format_decimal(histogram.rbegin()->first) << "\n";
  std::cout << "optimal actions (" << optima.size() << "):\n";
  for (const Step& step : optima) {
    std::cout << " ";
    for (BodyPart part : kAllBodyParts) {
      std::cout << " " << to_string(part) << "=" << to_string(step[part]);
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chainsim: lattice simulation of invention, imitation, and action chaining"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "./out";
  std::uint64_t seed = 1;
  int runs = 10;
  int threads = 1;
  std::string experiment_name;

  CLI::App* run_cmd = app.add_subcommand("run", "execute one seeded run and export its metrics");
  run_cmd->add_option("--config", config_path, "JSON configuration file");
  CLI::Option* seed_opt = run_cmd->add_option("--seed", seed, "run seed (overrides config)");
  run_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

  CLI::App* exp_cmd = app.add_subcommand("experiment", "run a preset multi-condition experiment");
  exp_cmd->add_option("name", experiment_name, "experiment name")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig4", "fig5"}));
  exp_cmd->add_option("--runs", runs, "runs per condition")->capture_default_str();
  exp_cmd->add_option("--seed", seed, "base seed (run k uses seed base+k)")
      ->capture_default_str();
  exp_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
  exp_cmd->add_option("--threads", threads, "worker threads for batch runs")
      ->capture_default_str();

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "enumerate all 729 actions and report the fitness landscape");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run_cmd->parsed()) {
      return cmd_run(config_path, seed, seed_opt->count() > 0, out_dir);
    }
    if (exp_cmd->parsed()) {
      return cmd_experiment(experiment_name, runs, seed, out_dir, threads);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle();
    }
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

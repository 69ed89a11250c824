#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chainsim/agent.hpp"

namespace chainsim {

struct WorldConfig {
  int width = 10;
  int height = 10;
  bool toroidal = true;
  double invention_probability = 0.5;  // per agent per iteration; else imitate
  InventionParams invention{};
  int iterations = 100;
  std::uint64_t seed = 1;
};

// Per-iteration society metrics.
struct MetricsRecord {
  int iteration = 0;
  double mean_fitness = 0.0;
  int diversity = 0;  // structurally distinct implemented chains
  double mean_chain_length = 0.0;
  double fraction_optimal_base = 0.0;

  bool operator==(const MetricsRecord&) const = default;
};

// The lattice of agents plus the synchronous iteration protocol. Agents
// are stored row-major; ids equal storage index. Each agent owns a random
// stream derived from (config.seed, id).
class World {
 public:
  explicit World(const WorldConfig& config);  // throws std::invalid_argument on empty grid

  const WorldConfig& config() const { return config_; }
  int iteration() const { return iteration_; }

  std::span<const Agent> agents() const { return agents_; }
  std::span<Agent> agents() { return agents_; }

  // Von Neumann neighborhood: wrapped on a torus, truncated at borders
  // otherwise. Throws std::invalid_argument for positions off the grid.
  std::vector<GridPos> neighbors(GridPos pos) const;

  // One synchronous iteration: every agent observes a snapshot of the
  // implemented actions, then (in id order) either invents or imitates
  // against that snapshot and adopts strictly fitter candidates.
  void step();

  MetricsRecord metrics() const;

 private:
  WorldConfig config_;
  std::vector<Agent> agents_;
  std::vector<RandomStream> streams_;
  int iteration_ = 0;
};

// Full seeded run; returns iterations + 1 records (iteration 0 included).
std::vector<MetricsRecord> run(const WorldConfig& config);

}  // namespace chainsim

#include "chainsim/world.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainsim {

World::World(const WorldConfig& config) : config_(config) {
  if (config_.width < 1 || config_.height < 1) {
    throw std::invalid_argument("world grid must be at least 1x1");
  }
  const int count = config_.width * config_.height;
  agents_.reserve(static_cast<std::size_t>(count));
  streams_.reserve(static_cast<std::size_t>(count));
  for (int id = 0; id < count; ++id) {
    Agent agent;
    agent.id = id;
    agent.position = GridPos{id % config_.width, id / config_.width};
    agent.current = ChainedAction::single(Step{});  // all stationary
    agent.trends = initial_trends(config_.invention.p_ext_max);
    agents_.push_back(std::move(agent));
    streams_.emplace_back(derive_stream_seed(config_.seed, static_cast<std::uint64_t>(id)));
  }
}

std::vector<GridPos> World::neighbors(GridPos pos) const {
  if (pos.x < 0 || pos.x >= config_.width || pos.y < 0 || pos.y >= config_.height) {
    throw std::invalid_argument("neighbors: position outside the grid");
  }
  const int w = config_.width;
  const int h = config_.height;
  std::vector<GridPos> result;
  result.reserve(4);
  const int offsets[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  for (const auto& off : offsets) {
    int nx = pos.x + off[0];
    int ny = pos.y + off[1];
    if (config_.toroidal) {
      nx = (nx + w) % w;
      ny = (ny + h) % h;
      if (nx == pos.x && ny == pos.y) continue;  // width or height of 1
      result.push_back(GridPos{nx, ny});
    } else if (nx >= 0 && nx < w && ny >= 0 && ny < h) {
      result.push_back(GridPos{nx, ny});
    }
  }
  return result;
}

void World::step() {
  // Snapshot of implemented actions: imitation observes the previous
  // iteration's state, so within-iteration adoptions stay invisible.
  std::vector<ChainedAction> snapshot;
  snapshot.reserve(agents_.size());
  for (const Agent& agent : agents_) snapshot.push_back(agent.current);

  const bool learning = config_.invention.learning_enabled;
  std::vector<ChainedAction> neighbor_actions;
  neighbor_actions.reserve(4);

  for (std::size_t i = 0; i < agents_.size(); ++i) {
    Agent& agent = agents_[i];
    RandomStream& rng = streams_[i];
    if (rng.bernoulli(config_.invention_probability)) {
      const ChainedAction candidate = invent(agent, config_.invention, rng);
      evaluate_and_adopt(agent, candidate, learning, config_.invention.p_ext_max);
    } else {
      neighbor_actions.clear();
      for (GridPos n : neighbors(agent.position)) {
        neighbor_actions.push_back(snapshot[static_cast<std::size_t>(n.y * config_.width + n.x)]);
      }
      const auto picked = imitate(agent, neighbor_actions, rng);
      if (picked) {
        evaluate_and_adopt(agent, *picked, learning, config_.invention.p_ext_max);
      }
    }
  }
  ++iteration_;
}

MetricsRecord World::metrics() const {
  MetricsRecord record;
  record.iteration = iteration_;

  double fitness_sum = 0.0;
  double length_sum = 0.0;
  int optimal_bases = 0;
  std::vector<std::vector<int>> signatures;
  signatures.reserve(agents_.size());
  for (const Agent& agent : agents_) {
    fitness_sum += fitness_chain(agent.current);
    length_sum += static_cast<double>(agent.current.length());
    if (is_optimal_step(agent.current.steps.front())) ++optimal_bases;
    signatures.push_back(chain_signature(agent.current));
  }
  std::sort(signatures.begin(), signatures.end());
  signatures.erase(std::unique(signatures.begin(), signatures.end()), signatures.end());

  const auto count = static_cast<double>(agents_.size());
  record.mean_fitness = fitness_sum / count;
  record.diversity = static_cast<int>(signatures.size());
  record.mean_chain_length = length_sum / count;
  record.fraction_optimal_base = optimal_bases / count;
  return record;
}

std::vector<MetricsRecord> run(const WorldConfig& config) {
  World world(config);
  std::vector<MetricsRecord> records;
  records.reserve(static_cast<std::size_t>(config.iterations) + 1);
  records.push_back(world.metrics());
  for (int t = 0; t < config.iterations; ++t) {
    world.step();
    records.push_back(world.metrics());
  }
  return records;
}

}  // namespace chainsim

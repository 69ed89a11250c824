#include "chainsim/agent.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace chainsim {

TrendState initial_trends(double p_ext_max) {
  TrendState trends;
  trends.p_ext = std::min(0.5, p_ext_max);
  return trends;
}

namespace {

Direction random_moving_direction(RandomStream& rng) {
  return rng.bernoulli(0.5) ? Direction::Up : Direction::Down;
}

// Mutated value for one part. Decisions read the pre-mutation step, so
// parts mutate independently of each other's outcomes this invention.
Direction mutate_part(const Step& base, BodyPart part, const TrendState& trends,
                      RandomStream& rng) {
  const Direction current = base[part];
  if (!is_moving(current)) {
    // Stationary parts start moving. A limb whose pair partner is moving
    // opposes the partner with probability p_sym, otherwise the direction
    // is uniform.
    const auto partner = pair_partner(part);
    if (partner && is_moving(base[*partner])) {
      if (rng.bernoulli(trends.p_sym)) return opposite(base[*partner]);
    }
    return random_moving_direction(rng);
  }
  // Moving parts stop with probability 1 - p_im, otherwise reverse.
  const double p_im = trends.p_im[static_cast<std::size_t>(part)];
  if (rng.bernoulli(1.0 - p_im)) return Direction::Stationary;
  return opposite(current);
}

}  // namespace

ChainedAction invent(const Agent& agent, const InventionParams& params, RandomStream& rng) {
  const Step& origin = agent.current.steps.front();
  Step base = origin;
  for (BodyPart part : kAllBodyParts) {
    if (rng.bernoulli(params.rate_of_change)) {
      base[part] = mutate_part(origin, part, agent.trends, rng);
    }
  }

  ChainedAction candidate = ChainedAction::single(base);
  if (!params.chaining_enabled) return candidate;

  std::array<BodyPart, 2> moving_arms{};
  std::size_t arm_count = 0;
  for (BodyPart arm : {BodyPart::LeftArm, BodyPart::RightArm}) {
    if (is_moving(base[arm])) moving_arms[arm_count++] = arm;
  }
  if (arm_count == 0) return candidate;

  const BodyPart arm = moving_arms[rng.uniform_below(static_cast<std::uint32_t>(arm_count))];
  while (candidate.steps.size() < static_cast<std::size_t>(params.max_chain_len) &&
         rng.bernoulli(agent.trends.p_ext)) {
    Step next = candidate.steps.back();
    next[arm] = opposite(next[arm]);
    candidate.steps.push_back(next);
  }
  if (candidate.steps.size() >= 2) candidate.chain_arm = arm;
  return candidate;
}

std::optional<ChainedAction> imitate(const Agent& agent,
                                     std::span<const ChainedAction> neighbor_actions,
                                     RandomStream& rng) {
  std::vector<std::size_t> order(neighbor_actions.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Fisher-Yates with explicit bounded draws.
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::size_t j = rng.uniform_below(static_cast<std::uint32_t>(i));
    std::swap(order[i - 1], order[j]);
  }

  const double own_fitness = fitness_chain(agent.current);
  for (std::size_t idx : order) {
    if (fitness_chain(neighbor_actions[idx]) > own_fitness) {
      return neighbor_actions[idx];
    }
  }
  return std::nullopt;
}

namespace {

// +0.1 / -0.1 nudge toward the activation change, clamped to [lo, hi].
double nudge(double value, int activation_new, int activation_old, double lo, double hi) {
  if (activation_new > activation_old) return std::min(hi, value + 0.1);
  if (activation_new < activation_old) return std::max(lo, value - 0.1);
  return value;
}

}  // namespace

TrendState update_trends(const TrendState& trends, const ChainedAction& old_action,
                         const ChainedAction& fresh, double p_ext_max) {
  if (!(fitness_chain(fresh) > fitness_chain(old_action))) {
    throw std::invalid_argument("update_trends: adopted action must be strictly fitter");
  }
  const HiddenActivations before = hidden_activations(old_action);
  const HiddenActivations after = hidden_activations(fresh);

  TrendState out = trends;
  for (double& p : out.p_im) {
    p = nudge(p, after.movement, before.movement, 0.0, 1.0);
  }
  out.p_sym = nudge(out.p_sym, after.symmetry, before.symmetry, 0.0, 1.0);
  out.p_ext = nudge(out.p_ext, after.opposite, before.opposite, 0.0, p_ext_max);
  return out;
}

bool evaluate_and_adopt(Agent& agent, const ChainedAction& candidate, bool learning_enabled,
                        double p_ext_max) {
  if (!(fitness_chain(candidate) > fitness_chain(agent.current))) return false;
  if (learning_enabled) {
    agent.trends = update_trends(agent.trends, agent.current, candidate, p_ext_max);
  }
  agent.current = candidate;
  return true;
}

}  // namespace chainsim

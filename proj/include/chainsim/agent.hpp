#pragma once

#include <array>
#include <optional>
#include <span>

#include "chainsim/action.hpp"
#include "chainsim/rng.hpp"

namespace chainsim {

// Learned probabilities that bias invention toward historically successful
// directions: per-part movement trend, opposed-limb trend, and chain
// extension trend.
struct TrendState {
  std::array<double, kBodyPartCount> p_im{0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
  double p_sym = 0.5;
  double p_ext = 0.5;  // kept within [0, p_ext_max]

  bool operator==(const TrendState&) const = default;
};

// Initial trends; p_ext starts at min(0.5, p_ext_max) so the extension
// trend respects its cap from the first draw.
TrendState initial_trends(double p_ext_max);

struct InventionParams {
  double rate_of_change = 1.0 / 6.0;  // per-part mutation probability
  bool chaining_enabled = true;
  bool learning_enabled = true;
  int max_chain_len = 100;
  double p_ext_max = 0.9;
};

struct GridPos {
  int x = 0;
  int y = 0;
  bool operator==(const GridPos&) const = default;
};

struct Agent {
  int id = 0;
  GridPos position{};
  ChainedAction current = ChainedAction::single(Step{});
  TrendState trends{};

  bool operator==(const Agent&) const = default;
};

// Builds a candidate action from the agent's current one. The base step is
// a per-part mutation of the current first step; with chaining enabled and
// at least one arm moving, alternation steps are appended with probability
// p_ext per trial up to max_chain_len. The candidate is always a valid
// chain; the caller decides adoption.
//
// Draw order (fixed for reproducibility): one change draw per part in body
// part order, plus the draws its mutation needs; then the chain arm pick
// (only when both arms move); then one extension draw per appended step.
ChainedAction invent(const Agent& agent, const InventionParams& params, RandomStream& rng);

// Scans the neighbor actions in a uniformly random order and returns the
// first one strictly fitter than the agent's current action, if any.
std::optional<ChainedAction> imitate(const Agent& agent,
                                     std::span<const ChainedAction> neighbor_actions,
                                     RandomStream& rng);

// Trend update applied when `fresh` replaced `old_action` (which requires
// strictly greater fitness; violating that throws std::invalid_argument).
// Each trend moves 0.1 toward the direction of its activation change and
// is clamped to its interval.
TrendState update_trends(const TrendState& trends, const ChainedAction& old_action,
                         const ChainedAction& fresh, double p_ext_max);

// Adopts the candidate iff it is strictly fitter, updating trends when
// learning is enabled. Returns whether adoption happened.
bool evaluate_and_adopt(Agent& agent, const ChainedAction& candidate, bool learning_enabled,
                        double p_ext_max);

}  // namespace chainsim

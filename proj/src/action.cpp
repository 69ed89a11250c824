#include "chainsim/action.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainsim {

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Down: return "down";
    case Direction::Stationary: return "stationary";
    case Direction::Up: return "up";
  }
  return "?";
}

const char* to_string(BodyPart p) {
  switch (p) {
    case BodyPart::LeftArm: return "left_arm";
    case BodyPart::RightArm: return "right_arm";
    case BodyPart::LeftLeg: return "left_leg";
    case BodyPart::RightLeg: return "right_leg";
    case BodyPart::Head: return "head";
    case BodyPart::Hips: return "hips";
  }
  return "?";
}

int step_code(const Step& step) {
  int code = 0;
  for (Direction d : step.positions) {
    code = code * 3 + static_cast<int>(d);
  }
  return code;
}

Step step_from_code(int code) {
  if (code < 0 || code >= kStepCount) {
    throw std::invalid_argument("step code out of range 0..728");
  }
  Step step;
  for (int i = kBodyPartCount - 1; i >= 0; --i) {
    step.positions[static_cast<std::size_t>(i)] = static_cast<Direction>(code % 3);
    code /= 3;
  }
  return step;
}

std::vector<Step> enumerate_steps() {
  std::vector<Step> steps;
  steps.reserve(kStepCount);
  for (int code = 0; code < kStepCount; ++code) {
    steps.push_back(step_from_code(code));
  }
  return steps;
}

bool is_valid_chain(const ChainedAction& chain) {
  const std::size_t n = chain.steps.size();
  if (n == 0) return false;
  if (n == 1) return !chain.chain_arm.has_value();
  if (!chain.chain_arm.has_value()) return false;
  const BodyPart arm = *chain.chain_arm;
  if (arm != BodyPart::LeftArm && arm != BodyPart::RightArm) return false;
  if (!is_moving(chain.steps[0][arm])) return false;
  for (std::size_t k = 1; k < n; ++k) {
    if (chain.steps[k][arm] != opposite(chain.steps[k - 1][arm])) return false;
  }
  return true;
}

namespace {

// Both limbs of the pair moving, in opposed vertical directions.
bool opposed_pair(const Step& step, BodyPart a, BodyPart b) {
  return is_moving(step[a]) && is_moving(step[b]) && step[a] == opposite(step[b]);
}

void require_valid(const ChainedAction& chain, const char* op) {
  if (!is_valid_chain(chain)) {
    throw std::invalid_argument(std::string(op) + ": invalid chained action");
  }
}

}  // namespace

double fitness_step(const Step& step) {
  int moving = 0;
  for (Direction d : step.positions) {
    if (is_moving(d)) ++moving;
  }
  const int arm_sym = opposed_pair(step, BodyPart::LeftArm, BodyPart::RightArm) ? 1 : 0;
  const int leg_sym = opposed_pair(step, BodyPart::LeftLeg, BodyPart::RightLeg) ? 1 : 0;
  const int head_moving = is_moving(step[BodyPart::Head]) ? 1 : 0;
  return moving + 1.5 * (arm_sym + leg_sym) + 2.0 * (1 - head_moving);
}

double fitness_chain(const ChainedAction& chain) {
  require_valid(chain, "fitness_chain");
  return fitness_step(chain.steps.front()) + static_cast<double>(chain.steps.size() - 1);
}

HiddenActivations hidden_activations(const ChainedAction& chain) {
  require_valid(chain, "hidden_activations");
  const Step& base = chain.steps.front();
  HiddenActivations act;
  for (Direction d : base.positions) {
    if (is_moving(d)) ++act.movement;
  }
  act.symmetry = (opposed_pair(base, BodyPart::LeftArm, BodyPart::RightArm) ? 1 : 0) +
                 (opposed_pair(base, BodyPart::LeftLeg, BodyPart::RightLeg) ? 1 : 0);
  act.opposite = static_cast<int>(chain.steps.size()) - 1;
  act.head_moving = is_moving(base[BodyPart::Head]) ? 1 : 0;
  return act;
}

std::vector<Step> optimal_steps() {
  std::vector<Step> best;
  double best_fitness = 0.0;
  for (const Step& step : enumerate_steps()) {
    const double f = fitness_step(step);
    if (f > best_fitness) {
      best_fitness = f;
      best.clear();
    }
    if (f == best_fitness) {
      best.push_back(step);
    }
  }
  return best;
}

bool is_optimal_step(const Step& step) {
  static const std::vector<int> optimal_codes = [] {
    std::vector<int> codes;
    for (const Step& s : optimal_steps()) codes.push_back(step_code(s));
    std::sort(codes.begin(), codes.end());
    return codes;
  }();
  return std::binary_search(optimal_codes.begin(), optimal_codes.end(), step_code(step));
}

std::vector<int> chain_signature(const ChainedAction& chain) {
  std::vector<int> sig;
  sig.reserve(chain.steps.size() + 1);
  sig.push_back(chain.chain_arm ? static_cast<int>(*chain.chain_arm) : -1);
  for (const Step& step : chain.steps) {
    sig.push_back(step_code(step));
  }
  return sig;
}

}  // namespace chainsim

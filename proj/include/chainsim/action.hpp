#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace chainsim {

// Semantic motion of one body part for one timestep. Down and Up are the
// two moving states; enumeration order (Down < Stationary < Up) is the
// digit order used by step codes.
enum class Direction : std::uint8_t { Down = 0, Stationary = 1, Up = 2 };

constexpr bool is_moving(Direction d) { return d != Direction::Stationary; }

// Opposite vertical direction. Stationary maps to itself.
constexpr Direction opposite(Direction d) {
  switch (d) {
    case Direction::Down: return Direction::Up;
    case Direction::Up: return Direction::Down;
    default: return Direction::Stationary;
  }
}

enum class BodyPart : std::uint8_t {
  LeftArm = 0,
  RightArm = 1,
  LeftLeg = 2,
  RightLeg = 3,
  Head = 4,
  Hips = 5,
};

inline constexpr int kBodyPartCount = 6;

inline constexpr std::array<BodyPart, kBodyPartCount> kAllBodyParts = {
    BodyPart::LeftArm, BodyPart::RightArm, BodyPart::LeftLeg,
    BodyPart::RightLeg, BodyPart::Head,    BodyPart::Hips,
};

// The other limb of a symmetric pair; empty for head and hips.
constexpr std::optional<BodyPart> pair_partner(BodyPart p) {
  switch (p) {
    case BodyPart::LeftArm: return BodyPart::RightArm;
    case BodyPart::RightArm: return BodyPart::LeftArm;
    case BodyPart::LeftLeg: return BodyPart::RightLeg;
    case BodyPart::RightLeg: return BodyPart::LeftLeg;
    default: return std::nullopt;
  }
}

const char* to_string(Direction d);
const char* to_string(BodyPart p);

// One single-timestep action: a direction for each of the six body parts.
// There are 3^6 = 729 distinct steps.
struct Step {
  std::array<Direction, kBodyPartCount> positions{
      Direction::Stationary, Direction::Stationary, Direction::Stationary,
      Direction::Stationary, Direction::Stationary, Direction::Stationary};

  Direction& operator[](BodyPart p) { return positions[static_cast<std::size_t>(p)]; }
  Direction operator[](BodyPart p) const { return positions[static_cast<std::size_t>(p)]; }

  bool operator==(const Step&) const = default;
};

inline constexpr int kStepCount = 729;  // 3^6

// Base-3 encoding of a step. LeftArm is the most significant digit, digit
// values follow the Direction enumeration order. Codes cover 0..728 and
// give the stable enumeration order.
int step_code(const Step& step);
Step step_from_code(int code);

// All 729 steps in step-code order, each exactly once.
std::vector<Step> enumerate_steps();

// A multi-step action: a non-empty step sequence. Chains of length >= 2
// carry the arm that alternates direction from step to step.
struct ChainedAction {
  std::vector<Step> steps;
  std::optional<BodyPart> chain_arm;  // present iff steps.size() >= 2

  static ChainedAction single(const Step& step) { return ChainedAction{{step}, std::nullopt}; }

  std::size_t length() const { return steps.size(); }

  bool operator==(const ChainedAction&) const = default;
};

// Structural validity: length 1 chains carry no chain arm; longer chains
// name an arm that is moving in step 0 and reverses direction at every
// consecutive step pair.
bool is_valid_chain(const ChainedAction& chain);

// Feature-detector readout used by the learnable trends.
struct HiddenActivations {
  int movement = 0;     // count of moving parts in the first step, 0..6
  int symmetry = 0;     // opposed-arm indicator + opposed-leg indicator, 0..2
  int opposite = 0;     // chain length - 1
  int head_moving = 0;  // 1 iff the head moves in the first step

  bool operator==(const HiddenActivations&) const = default;
};

// Single-step fitness: m + 1.5*(s_a + s_l) + 2*(1 - m_h), where m counts
// moving parts, s_a/s_l flag arm/leg pairs moving in opposed vertical
// directions, and m_h flags a moving head. Maximum is 10.
double fitness_step(const Step& step);

// Chain fitness: fitness of the first step plus one per additional step.
// Throws std::invalid_argument on an invalid chain.
double fitness_chain(const ChainedAction& chain);

// Throws std::invalid_argument on an invalid chain.
HiddenActivations hidden_activations(const ChainedAction& chain);

// The argmax set of fitness_step over all 729 steps, in step-code order.
std::vector<Step> optimal_steps();

// True iff the step is one of the eight fitness-10 steps.
bool is_optimal_step(const Step& step);

// Structural identity key (chain arm, then step codes); equal keys iff
// equal chains. Used for diversity counts and set comparisons.
std::vector<int> chain_signature(const ChainedAction& chain);

}  // namespace chainsim

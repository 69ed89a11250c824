#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "chainsim/action.hpp"

using namespace chainsim;

namespace {

Step make_step(Direction left_arm, Direction right_arm, Direction left_leg, Direction right_leg,
               Direction head, Direction hips) {
  Step step;
  step[BodyPart::LeftArm] = left_arm;
  step[BodyPart::RightArm] = right_arm;
  step[BodyPart::LeftLeg] = left_leg;
  step[BodyPart::RightLeg] = right_leg;
  step[BodyPart::Head] = head;
  step[BodyPart::Hips] = hips;
  return step;
}

const Step kAllStationary{};

// Head still, hips up, arms opposed, legs opposed: one of the 8 optima.
const Step kOptimalStep = make_step(Direction::Up, Direction::Down, Direction::Up,
                                    Direction::Down, Direction::Stationary, Direction::Up);

// Chain where `arm` flips direction on every following step and everything
// else repeats.
ChainedAction make_chain(const Step& base, BodyPart arm, std::size_t length) {
  ChainedAction chain = ChainedAction::single(base);
  for (std::size_t k = 1; k < length; ++k) {
    Step next = chain.steps.back();
    next[arm] = opposite(next[arm]);
    chain.steps.push_back(next);
  }
  if (length >= 2) chain.chain_arm = arm;
  return chain;
}

}  // namespace

TEST_CASE("enumerate_steps yields all 729 distinct steps") {
  const auto steps = enumerate_steps();
  CHECK(steps.size() == 729);

  std::set<std::array<Direction, kBodyPartCount>> distinct;
  for (const Step& s : steps) distinct.insert(s.positions);
  CHECK(distinct.size() == 729);

  CHECK(std::find(steps.begin(), steps.end(), kAllStationary) != steps.end());
}

TEST_CASE("step codes round-trip and follow enumeration order") {
  const auto steps = enumerate_steps();
  for (int code = 0; code < kStepCount; ++code) {
    CHECK(step_code(steps[static_cast<std::size_t>(code)]) == code);
  }
  CHECK_THROWS_AS(step_from_code(-1), std::invalid_argument);
  CHECK_THROWS_AS(step_from_code(729), std::invalid_argument);
}

TEST_CASE("fitness_step on known steps") {
  CHECK(fitness_step(kAllStationary) == 2.0);
  CHECK(fitness_step(kOptimalStep) == 10.0);

  // All six parts moving, arms and legs opposed, head moving: 6 + 3 + 0.
  const Step all_moving = make_step(Direction::Up, Direction::Down, Direction::Up,
                                    Direction::Down, Direction::Up, Direction::Up);
  CHECK(fitness_step(all_moving) == 9.0);

  // Same-direction arm movement is not the rewarded coordination.
  const Step same_direction = make_step(Direction::Up, Direction::Up, Direction::Stationary,
                                        Direction::Stationary, Direction::Stationary,
                                        Direction::Stationary);
  CHECK(fitness_step(same_direction) == 4.0);  // m=2, no symmetry bonus
}

TEST_CASE("brute force: fitness landscape extremes") {
  double max_fitness = 0.0;
  double min_fitness = 1e18;
  int max_count = 0;
  for (const Step& step : enumerate_steps()) {
    const double f = fitness_step(step);
    if (f > max_fitness) {
      max_fitness = f;
      max_count = 0;
    }
    if (f == max_fitness) ++max_count;
    min_fitness = std::min(min_fitness, f);
  }
  CHECK(max_fitness == 10.0);
  CHECK(max_count == 8);
  // A moving head costs the stability bonus but still counts as movement,
  // so nothing scores below head-only movement: 1 + 0 + 0.
  CHECK(min_fitness == 1.0);
}

TEST_CASE("optimal_steps returns exactly the 2x2x2 argmax family") {
  const auto optima = optimal_steps();
  CHECK(optima.size() == 8);
  for (const Step& step : optima) {
    CHECK(fitness_step(step) == 10.0);
    CHECK(step[BodyPart::Head] == Direction::Stationary);
    CHECK(is_moving(step[BodyPart::Hips]));
    CHECK(step[BodyPart::LeftArm] == opposite(step[BodyPart::RightArm]));
    CHECK(step[BodyPart::LeftLeg] == opposite(step[BodyPart::RightLeg]));
  }

  // Construct the expected family directly: hips x arms x legs each 2 ways.
  std::vector<int> expected_codes;
  for (Direction hips : {Direction::Down, Direction::Up}) {
    for (Direction left_arm : {Direction::Down, Direction::Up}) {
      for (Direction left_leg : {Direction::Down, Direction::Up}) {
        expected_codes.push_back(step_code(make_step(left_arm, opposite(left_arm), left_leg,
                                                     opposite(left_leg), Direction::Stationary,
                                                     hips)));
      }
    }
  }
  std::sort(expected_codes.begin(), expected_codes.end());
  std::vector<int> actual_codes;
  for (const Step& step : optima) actual_codes.push_back(step_code(step));
  std::sort(actual_codes.begin(), actual_codes.end());
  CHECK(actual_codes == expected_codes);

  for (const Step& step : enumerate_steps()) {
    CHECK(is_optimal_step(step) == (fitness_step(step) == 10.0));
  }
}

TEST_CASE("is_valid_chain") {
  CHECK(is_valid_chain(ChainedAction::single(kAllStationary)));

  SUBCASE("two-step alternation on the left arm") {
    auto chain = make_chain(kOptimalStep, BodyPart::LeftArm, 2);
    CHECK(is_valid_chain(chain));
    CHECK(chain.steps[0][BodyPart::LeftArm] == Direction::Up);
    CHECK(chain.steps[1][BodyPart::LeftArm] == Direction::Down);
  }

  SUBCASE("chain arm stationary in the first step") {
    ChainedAction chain;
    chain.steps = {kAllStationary, kAllStationary};
    chain.chain_arm = BodyPart::LeftArm;
    CHECK_FALSE(is_valid_chain(chain));
  }

  SUBCASE("alternation broken mid-chain") {
    auto chain = make_chain(kOptimalStep, BodyPart::RightArm, 3);
    chain.steps[2][BodyPart::RightArm] = chain.steps[1][BodyPart::RightArm];
    CHECK_FALSE(is_valid_chain(chain));
  }

  SUBCASE("chain arm bookkeeping") {
    ChainedAction single = ChainedAction::single(kOptimalStep);
    single.chain_arm = BodyPart::LeftArm;  // arm recorded on a 1-step chain
    CHECK_FALSE(is_valid_chain(single));

    auto no_arm = make_chain(kOptimalStep, BodyPart::LeftArm, 2);
    no_arm.chain_arm.reset();
    CHECK_FALSE(is_valid_chain(no_arm));

    auto not_an_arm = make_chain(kOptimalStep, BodyPart::LeftArm, 2);
    not_an_arm.chain_arm = BodyPart::Hips;
    CHECK_FALSE(is_valid_chain(not_an_arm));

    ChainedAction empty;
    CHECK_FALSE(is_valid_chain(empty));
  }
}

TEST_CASE("fitness_chain") {
  CHECK(fitness_chain(ChainedAction::single(kOptimalStep)) == 10.0);
  CHECK(fitness_chain(make_chain(kOptimalStep, BodyPart::LeftArm, 2)) == 11.0);

  // Base with only the left arm up: 1 + 0 + 2 = 3; four steps add 3 more.
  const Step lone_arm = make_step(Direction::Up, Direction::Stationary, Direction::Stationary,
                                  Direction::Stationary, Direction::Stationary,
                                  Direction::Stationary);
  CHECK(fitness_step(lone_arm) == 3.0);
  CHECK(fitness_chain(make_chain(lone_arm, BodyPart::LeftArm, 4)) == 6.0);

  SUBCASE("n=1 chains score exactly like their step, for every base") {
    for (const Step& step : enumerate_steps()) {
      CHECK(fitness_chain(ChainedAction::single(step)) == fitness_step(step));
    }
  }

  SUBCASE("each appended alternation step adds exactly 1") {
    for (const Step& step : enumerate_steps()) {
      for (BodyPart arm : {BodyPart::LeftArm, BodyPart::RightArm}) {
        if (!is_moving(step[arm])) continue;
        double previous = fitness_chain(ChainedAction::single(step));
        for (std::size_t len = 2; len <= 5; ++len) {
          const double f = fitness_chain(make_chain(step, arm, len));
          CHECK(f == previous + 1.0);
          previous = f;
        }
      }
    }
  }

  SUBCASE("invalid chains are rejected") {
    ChainedAction bad;
    bad.steps = {kAllStationary, kAllStationary};
    bad.chain_arm = BodyPart::LeftArm;
    CHECK_THROWS_AS(fitness_chain(bad), std::invalid_argument);
    CHECK_THROWS_AS(hidden_activations(bad), std::invalid_argument);
  }
}

TEST_CASE("hidden_activations") {
  CHECK(hidden_activations(ChainedAction::single(kAllStationary)) ==
        HiddenActivations{0, 0, 0, 0});
  CHECK(hidden_activations(ChainedAction::single(kOptimalStep)) == HiddenActivations{5, 2, 0, 0});
  CHECK(hidden_activations(make_chain(kOptimalStep, BodyPart::LeftArm, 4)) ==
        HiddenActivations{5, 2, 3, 0});

  SUBCASE("activations reproduce the step fitness for all 729 steps") {
    for (const Step& step : enumerate_steps()) {
      const auto act = hidden_activations(ChainedAction::single(step));
      CHECK(act.movement + 1.5 * act.symmetry + 2.0 * (1 - act.head_moving) ==
            fitness_step(step));
    }
  }
}

TEST_CASE("chain_signature distinguishes chains structurally") {
  const auto a = make_chain(kOptimalStep, BodyPart::LeftArm, 3);
  auto b = a;
  CHECK(chain_signature(a) == chain_signature(b));

  b.steps[2][BodyPart::Hips] = Direction::Down;
  CHECK(chain_signature(a) != chain_signature(b));

  // Same step sequence but attributed to the other arm stays distinct.
  Step second = kOptimalStep;
  second[BodyPart::LeftArm] = opposite(second[BodyPart::LeftArm]);
  second[BodyPart::RightArm] = opposite(second[BodyPart::RightArm]);
  ChainedAction left{{kOptimalStep, second}, BodyPart::LeftArm};
  ChainedAction right{{kOptimalStep, second}, BodyPart::RightArm};
  CHECK(is_valid_chain(left));
  CHECK(is_valid_chain(right));
  CHECK(chain_signature(left) != chain_signature(right));
}

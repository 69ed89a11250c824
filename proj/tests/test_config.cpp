#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "chainsim/config.hpp"
#include "chainsim/errors.hpp"

using namespace chainsim;

namespace {

std::string error_message(const std::string& json_text) {
  try {
    parse_config(json_text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("empty config keeps every default") {
  const WorldConfig config = parse_config("{}");
  const WorldConfig defaults;
  CHECK(config.width == defaults.width);
  CHECK(config.height == defaults.height);
  CHECK(config.toroidal == defaults.toroidal);
  CHECK(config.invention_probability == defaults.invention_probability);
  CHECK(config.invention.rate_of_change == defaults.invention.rate_of_change);
  CHECK(config.invention.chaining_enabled == defaults.invention.chaining_enabled);
  CHECK(config.invention.learning_enabled == defaults.invention.learning_enabled);
  CHECK(config.invention.max_chain_len == defaults.invention.max_chain_len);
  CHECK(config.invention.p_ext_max == defaults.invention.p_ext_max);
  CHECK(config.iterations == defaults.iterations);
  CHECK(config.seed == defaults.seed);
}

TEST_CASE("all keys are honored") {
  const WorldConfig config = parse_config(R"({
    "width": 6, "height": 4, "toroidal": false,
    "invention_probability": 0.25, "rate_of_change": 0.5,
    "chaining_enabled": false, "learning_enabled": false,
    "max_chain_len": 9, "p_ext_max": 0.75,
    "iterations": 33, "seed": 123456789012345
  })");
  CHECK(config.width == 6);
  CHECK(config.height == 4);
  CHECK(config.toroidal == false);
  CHECK(config.invention_probability == 0.25);
  CHECK(config.invention.rate_of_change == 0.5);
  CHECK(config.invention.chaining_enabled == false);
  CHECK(config.invention.learning_enabled == false);
  CHECK(config.invention.max_chain_len == 9);
  CHECK(config.invention.p_ext_max == 0.75);
  CHECK(config.iterations == 33);
  CHECK(config.seed == 123456789012345ull);
}

TEST_CASE("diagnostics name the offending field") {
  CHECK(error_message(R"({"invention_probability": 1.5})")
            .find("invention_probability") != std::string::npos);
  CHECK(error_message(R"({"rate_of_change": -0.1})").find("rate_of_change") !=
        std::string::npos);
  CHECK(error_message(R"({"p_ext_max": 1.0})").find("p_ext_max") != std::string::npos);
  CHECK(error_message(R"({"max_chain_len": 0})").find("max_chain_len") != std::string::npos);
  CHECK(error_message(R"({"width": 0})").find("width") != std::string::npos);
  CHECK(error_message(R"({"iterations": -1})").find("iterations") != std::string::npos);
  CHECK(error_message(R"({"width": "ten"})").find("width") != std::string::npos);
  CHECK(error_message(R"({"width": 3.7})").find("width") != std::string::npos);
  CHECK(error_message(R"({"seed": -1})").find("seed") != std::string::npos);
  CHECK(error_message(R"({"toroidal": 1})").find("toroidal") != std::string::npos);
  CHECK(error_message(R"({"speed": 3})").find("speed") != std::string::npos);
  CHECK(error_message("[1,2]").find("object") != std::string::npos);
  CHECK(error_message("{nope").find("JSON") != std::string::npos);
}

TEST_CASE("config files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "chainsim_test_config";
  fs::create_directories(dir);
  const fs::path path = dir / "config.json";
  {
    std::ofstream file(path);
    file << R"({"width": 3, "height": 3, "iterations": 5})";
  }
  const WorldConfig config = load_config_file(path);
  CHECK(config.width == 3);
  CHECK(config.iterations == 5);

  CHECK_THROWS_AS(load_config_file(dir / "does_not_exist.json"), io_error);
}

#include "chainsim/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "chainsim/errors.hpp"

namespace chainsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("config field `" + field + "` " + what);
}

template <typename T>
T get_field(const json& doc, const std::string& key, T fallback) {
  if (!doc.contains(key)) return fallback;
  const json& value = doc.at(key);
  // get<> alone would truncate floats to ints and wrap negative seeds.
  if constexpr (std::is_same_v<T, bool>) {
    if (!value.is_boolean()) fail(key, "must be a boolean");
  } else if constexpr (std::is_same_v<T, std::uint64_t>) {
    if (!value.is_number_unsigned()) fail(key, "must be a non-negative integer");
  } else if constexpr (std::is_integral_v<T>) {
    if (!value.is_number_integer()) fail(key, "must be an integer");
  } else {
    if (!value.is_number()) fail(key, "must be a number");
  }
  try {
    return value.get<T>();
  } catch (const json::exception&) {
    fail(key, "has the wrong type (got " + std::string(value.type_name()) + ")");
  }
}

}  // namespace

void validate_config(const WorldConfig& config) {
  if (config.width < 1) fail("width", "must be >= 1");
  if (config.height < 1) fail("height", "must be >= 1");
  if (config.invention_probability < 0.0 || config.invention_probability > 1.0) {
    fail("invention_probability", "must be within [0, 1]");
  }
  if (config.invention.rate_of_change < 0.0 || config.invention.rate_of_change > 1.0) {
    fail("rate_of_change", "must be within [0, 1]");
  }
  if (config.invention.max_chain_len < 1) fail("max_chain_len", "must be >= 1");
  if (config.invention.p_ext_max < 0.0 || config.invention.p_ext_max >= 1.0) {
    fail("p_ext_max", "must be within [0, 1)");
  }
  if (config.iterations < 0) fail("iterations", "must be >= 0");
}

WorldConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

  static const char* known_keys[] = {
      "width",         "height",       "toroidal",        "invention_probability",
      "rate_of_change", "chaining_enabled", "learning_enabled", "max_chain_len",
      "p_ext_max",     "iterations",   "seed"};
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : known_keys) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(key, "is not a recognized configuration key");
  }

  WorldConfig config;
  config.width = get_field<int>(doc, "width", config.width);
  config.height = get_field<int>(doc, "height", config.height);
  config.toroidal = get_field<bool>(doc, "toroidal", config.toroidal);
  config.invention_probability =
      get_field<double>(doc, "invention_probability", config.invention_probability);
  config.invention.rate_of_change =
      get_field<double>(doc, "rate_of_change", config.invention.rate_of_change);
  config.invention.chaining_enabled =
      get_field<bool>(doc, "chaining_enabled", config.invention.chaining_enabled);
  config.invention.learning_enabled =
      get_field<bool>(doc, "learning_enabled", config.invention.learning_enabled);
  config.invention.max_chain_len =
      get_field<int>(doc, "max_chain_len", config.invention.max_chain_len);
  config.invention.p_ext_max = get_field<double>(doc, "p_ext_max", config.invention.p_ext_max);
  config.iterations = get_field<int>(doc, "iterations", config.iterations);
  config.seed = get_field<std::uint64_t>(doc, "seed", config.seed);

  validate_config(config);
  return config;
}

WorldConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw io_error("cannot read config file: " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace chainsim

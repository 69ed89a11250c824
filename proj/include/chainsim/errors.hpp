#pragma once

#include <stdexcept>

namespace chainsim {

// Filesystem/stream failures; the CLI maps these to exit code 2 and
// everything else invalid to exit code 1.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chainsim

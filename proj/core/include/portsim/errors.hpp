#pragma once

#include <stdexcept>
#include <string>

namespace portsim {

// Error taxonomy; the CLI maps each class onto a distinct exit code.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace portsim

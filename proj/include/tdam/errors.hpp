#pragma once

#include <stdexcept>
#include <string>

namespace tdam {

// Contract family: bad arguments, violated preconditions, invalid
// configuration. The CLI maps these to exit code 1.
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : ContractError {
  using ContractError::ContractError;
};

struct ConfigError : ContractError {
  using ContractError::ContractError;
};

// I/O family: filesystem failures and malformed file contents. The CLI
// maps these to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormatError : IoError {
  using IoError::IoError;
};

struct TruncationError : IoError {
  using IoError::IoError;
};

struct ParseError : IoError {
  using IoError::IoError;
};

}  // namespace tdam

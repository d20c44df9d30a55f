#pragma once

#include <stdexcept>
#include <string>

namespace bearing {

// Shape/axis disagreements between tensors or grid indices out of range.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Contract violations that are not shape-related (non-scalar loss, bad config).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

// File I/O failures, always carrying the offending path in the message.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// NaN/Inf encountered where finite values are required (e.g. gradients).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate geometric input (zero displacement azimuth, empty record set).
class DegenerateInputError : public std::invalid_argument {
 public:
  explicit DegenerateInputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bearing

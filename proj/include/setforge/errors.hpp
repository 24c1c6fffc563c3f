#pragma once

#include <stdexcept>
#include <string>

namespace setforge {

/// Malformed or out-of-contract input (bad element index, empty family
/// where one is required, non-partition blocks, ...).
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation would materialize more sets than the configured budget.
class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace setforge

#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

/// Invalid arguments: wrong dimensions, violated preconditions, bad site sets.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed to meet its own accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ybe

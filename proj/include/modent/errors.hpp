#pragma once

#include <stdexcept>
#include <string>

namespace modent {

/// Bad arguments or malformed data handed to an operation.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A computed quantity left its expected regime (convention bug, noise floor
/// exceeded, divergent mode). Distinct from input_error so callers can tell
/// "you fed me garbage" from "the numerics are telling you something".
class diagnostic_error : public std::runtime_error {
 public:
  explicit diagnostic_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace modent

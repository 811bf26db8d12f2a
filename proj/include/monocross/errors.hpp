#pragma once

#include <stdexcept>
#include <string>

namespace monocross {

// Malformed input: bad dimensions, bad indices, parse failures, schema violations.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition does not hold for otherwise well-formed input.
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An explicit guard against exponential blow-up was hit; raise the limit to proceed.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monocross

#pragma once

#include <stdexcept>
#include <string>

namespace cyclecover {

// A violated operation precondition.  The CLI maps this to exit code 3.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text or JSON.  The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclecover

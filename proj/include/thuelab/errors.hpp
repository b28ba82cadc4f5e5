#pragma once

#include <stdexcept>
#include <string>

namespace thuelab {

/// Precondition violated by the caller (bad symbol, bad alphabet, exhausted script).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A log does not satisfy its structural invariants or does not fit the list system.
class MalformedLog : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replaying a log against a Ben strategy disagrees with what the strategy plays.
class InconsistentLog : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thuelab

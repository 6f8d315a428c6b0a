#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gee {

/// Malformed text input. Carries the 1-based line number of the offending line.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Binary file with bad magic, unknown version or truncated payload.
class format_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed input whose values violate a domain constraint (label range, node id).
class validation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation precondition (dimension mismatch, reps < 3, ...).
class contract_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Open/read/write failure. The message names the path.
class io_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gee

// Error taxonomy shared across the library. Validation problems (bad input
// data) and capacity problems (inputs beyond the supported size) are kept
// apart because the CLI maps them to different exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace dst {

enum class errc {
  // frame construction
  empty_frame,
  blank_label,
  duplicate_label,
  // subsets and masses
  empty_set,
  foreign_set,
  negative_mass,
  mass_out_of_range,
  duplicate_subset,
  mass_sum,
  // distributions and bounds
  invalid_probability,
  invalid_bounds,
  // entropy
  invalid_base,
  // transforms
  undefined_transform,
  non_convergence,
  // parsing
  syntax,
  unknown_label,
  // capacity limits
  frame_too_large,
  budget_exceeded,
  // catch-all for malformed arguments
  invalid_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Invalid input data: malformed frames, masses that do not sum to one, etc.
// CLI exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a hard capacity limit (frame larger than 30 elements,
// enumeration budgets). CLI exit code 2.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An iterative solve failed to reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Validation error with a source position (1-based line and column).
class ParseError : public ValidationError {
 public:
  ParseError(errc code, const std::string& message, int line, int column)
      : ValidationError(code, message + " (line " + std::to_string(line) +
                                  ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace dst

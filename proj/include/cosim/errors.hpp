#pragma once

#include <stdexcept>
#include <string>

namespace cosim {

/// Base class for all errors raised by the co-simulation stack.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An engine tried to schedule an event before the current clock.
/// Always indicates a bug in the calling engine, never a data problem.
class SchedulingInPastError : public Error {
 public:
  using Error::Error;
};

/// Scenario document could not be parsed at all.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Scenario parsed but violates a constraint. The message names the
/// offending field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A flow references an agent id that does not exist in the world.
class UnknownAgentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Engine clocks disagree at a window barrier. Aborts the run.
class DesyncError : public Error {
 public:
  using Error::Error;
};

/// Output path could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cosim

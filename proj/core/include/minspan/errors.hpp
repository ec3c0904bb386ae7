#ifndef MINSPAN_ERRORS_HPP
#define MINSPAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minspan {

/// Base class for all library errors that map to CLI exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file or unusable header values. CLI exit code 2.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Generator rows are linearly dependent. CLI exit code 3.
class DependentRowsError : public Error {
 public:
  explicit DependentRowsError(const std::string& msg) : Error(msg) {}
};

/// A state/enumeration cap would be exceeded. CLI exit code 4.
class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& msg) : Error(msg) {}
};

/// An operation was called on input that violates its precondition
/// (e.g. a non-minimal matrix where a minimal one is required). CLI exit code 5.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

}  // namespace minspan

#endif

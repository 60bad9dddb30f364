#pragma once

#include <stdexcept>
#include <string>

namespace bqg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: group tables, descriptors, actions that are not homomorphisms.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach its tolerance (rounding residual,
/// non-converging isotypic splitting).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency audit failed (completeness counts, non-integer
/// fusion totals, cocycle mismatches that the theory rules out).
class AuditError : public Error {
 public:
  using Error::Error;
};

/// Configuration error carrying the JSON location it was raised at.
class ConfigError : public Error {
 public:
  ConfigError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace bqg

#pragma once

#include <stdexcept>
#include <string>

namespace adorb {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands have incompatible dimensions or variable sets.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// A documented precondition was violated (maps to CLI exit code 2).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Evaluation of the rational potential at a trace-zero point: the point
// lies on the incidence variety, where the map is undefined.
class IndeterminacyError : public Error {
 public:
  explicit IndeterminacyError(const std::string& what) : Error(what) {}
};

// A configurable resource cap was exceeded (maps to CLI exit code 3).
class ResourceCapError : public Error {
 public:
  explicit ResourceCapError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace adorb

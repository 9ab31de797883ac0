#ifndef SVFRACTAL_ERRORS_HPP
#define SVFRACTAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svf {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression text could not be parsed; offset is the byte position of the
// first offending character.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class UnknownIdentifier : public SyntaxError {
public:
  UnknownIdentifier(const std::string& name, std::size_t offset)
      : SyntaxError("unknown identifier '" + name + "'", offset) {}
};

// Expression evaluated to NaN or infinity.
class NonFiniteResult : public Error {
public:
  explicit NonFiniteResult(const std::string& msg) : Error(msg) {}
};

// Argument outside the domain contract of an operation.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Configuration file failed schema validation.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Fixed-point iteration exceeded its a-priori cap.
class NoConvergence : public Error {
public:
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// A theorem hypothesis required by a check is not met by the inputs.
class HypothesisViolated : public Error {
public:
  explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};

}  // namespace svf

#endif

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conespec {

/// Base class for all conespec errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two vectors (or a vector and an operator) live in different cone spaces.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation would produce a vector outside the cone's membership rule.
class ConeViolationError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A finite-horizon search ran out of budget before certifying anything.
class HorizonExhaustedError : public Error {
 public:
  using Error::Error;
};

/// No seed reaches the required orbit mass; the target likely exceeds the radius.
class TargetAboveRadiusError : public Error {
 public:
  using Error::Error;
};

/// The geometric-sum construction needs unbounded partial orbits and none were found.
class DivergenceThresholdUnreachedError : public Error {
 public:
  using Error::Error;
};

class NotAPowerEigenvectorError : public Error {
 public:
  using Error::Error;
};

/// Zero-target construction found no k with |T^{k+1}x| < eps |T^k x|.
class ZeroDecayNotFoundError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Expression syntax error; carries the byte offset of the offending token.
class ExprParseError : public Error {
 public:
  ExprParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Short machine-readable tag used in reports when a construction fails.
std::string reason_code(const Error& e);

}  // namespace conespec

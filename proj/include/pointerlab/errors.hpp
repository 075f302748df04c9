#pragma once

#include <stdexcept>
#include <string>

namespace pointerlab {

/// Base class for violated physical invariants and operation preconditions.
/// The CLI maps these to exit code 3.
class PhysicsError : public std::runtime_error {
 public:
  explicit PhysicsError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidStateError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

class InvalidOverlapError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

/// Packet pair outside the supported equal-width, equal-mass, equal-time family.
class UnsupportedPacketPair : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

class ParameterError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

class RangeError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

/// An operation was invoked in a regime where it is not defined, e.g.
/// actualizing a collapse while the packets still interfere strongly.
class RegimeError : public PhysicsError {
 public:
  using PhysicsError::PhysicsError;
};

/// Malformed configuration input. The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, int line, const std::string& what)
      : std::runtime_error(format(key, line, what)), key_(std::move(key)), line_(line) {}

  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& key, int line, const std::string& what) {
    std::string msg = "config error";
    if (line > 0) msg += " (line " + std::to_string(line) + ")";
    if (!key.empty()) msg += " [" + key + "]";
    return msg + ": " + what;
  }

  std::string key_;
  int line_;
};

}  // namespace pointerlab

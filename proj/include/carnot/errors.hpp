#pragma once

#include <stdexcept>
#include <string>

namespace carnot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid group configuration or command parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Operand shapes do not agree (point length, algebra element length, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Index outside 1..2n.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Jet requested inside a field's declared singular set.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// A primitive was evaluated outside its domain (log of a non-positive value, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A negative power of a vanishing gradient norm was needed.
class DegeneratePointError : public Error {
 public:
  using Error::Error;
};

}  // namespace carnot

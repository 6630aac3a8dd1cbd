#pragma once

#include <stdexcept>
#include <string>

namespace gapless {

// All library failures derive from Error so callers can map them to exit
// codes without knowing every kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters, tolerances or configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a function (y <= 0, s outside
// the radial interval, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class ShapeAnomaly : public Error {
 public:
  using Error::Error;
};

}  // namespace gapless

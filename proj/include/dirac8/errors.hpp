#pragma once

#include <stdexcept>
#include <string>

namespace dirac8 {

/// Components 0/4 of a photon wave-function (or a continuity/Gauss residual) exceeded tolerance.
class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Superluminal boost or similar out-of-domain physical input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Energy projectors requested at k = 0, m = 0 where H vanishes.
class DegenerateMode : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Zitterbewegung analysis could not isolate a single dominant line.
class FitFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or schema-violating configuration; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dirac8

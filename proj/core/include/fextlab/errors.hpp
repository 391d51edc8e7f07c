#pragma once

#include <stdexcept>
#include <string>

namespace fextlab {

/// Base class for every numerical failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cholesky pivot was not positive; the caller should raise the precision.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(std::size_t pivot, const std::string& detail)
      : Error("matrix not positive definite at pivot " + std::to_string(pivot) + ": " + detail),
        pivot_(pivot) {}
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class ToleranceNotMet : public Error {
 public:
  using Error::Error;
};

/// A solve finished but its residual exceeds the contract bound.
class ResidualTooLarge : public Error {
 public:
  using Error::Error;
};

class OutOfRegime : public Error {
 public:
  using Error::Error;
};

class BranchError : public Error {
 public:
  using Error::Error;
};

class RootNotFound : public Error {
 public:
  using Error::Error;
};

class ExchangeStalled : public Error {
 public:
  using Error::Error;
};

class DegenerateReference : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (function specs, config files, experiment specs).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace fextlab

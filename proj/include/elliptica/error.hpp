#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace elliptica {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (zero theta argument, violated hypothesis, unbalanced series, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A denominator factor vanished (|theta| below guard_eps), or numerator and
/// denominator zeros met in an indeterminate 0/0.
class PoleError : public Error {
 public:
  PoleError(std::string factor, long index, const std::string& what)
      : Error(what), factor_(std::move(factor)), index_(index) {}

  const std::string& factor() const noexcept { return factor_; }
  long index() const noexcept { return index_; }

 private:
  std::string factor_;
  long index_;
};

/// Problem size above the enumeration caps.
class ScaleError : public Error {
 public:
  using Error::Error;
};

/// Integer coordinate outside |x| <= 10^4.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration or unknown suite.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace elliptica

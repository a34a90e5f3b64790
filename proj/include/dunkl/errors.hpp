#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

enum class ErrorCode {
  InvalidArgument = 1,
  DegenerateSpectral = 2,
  NonConvergence = 3,
  Domain = 4,
  Io = 5,
};

// Base of every exception thrown by the library. The C API maps `code()` onto
// its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

// Spectral parameter too close to a chamber wall for the double-integral formulas.
class DegenerateSpectral : public Error {
 public:
  explicit DegenerateSpectral(const std::string& what) : Error(ErrorCode::DegenerateSpectral, what) {}
};

// Node doubling hit its cap before two successive values agreed.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double previous, double last)
      : Error(ErrorCode::NonConvergence, what), previous_(previous), last_(last) {}
  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

// Evaluation outside a function's mathematical domain (interlacing violated,
// non-finite integrand, point on a wall where a quotient is singular, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace dunkl

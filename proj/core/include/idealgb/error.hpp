#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idealgb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial or rational text. `position` is a 0-based column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at column " + std::to_string(position + 1)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input polynomials to the team construction are linearly dependent.
class DependentPolynomials : public Error {
 public:
  using Error::Error;
};

/// The interpolation functionals are linearly dependent.
class DependentConditions : public Error {
 public:
  using Error::Error;
};

class NotDInvariant : public Error {
 public:
  NotDInvariant(const std::string& what, std::size_t basis_index,
                std::size_t variable)
      : Error(what), basis_index_(basis_index), variable_(variable) {}

  std::size_t basisIndex() const noexcept { return basis_index_; }
  std::size_t variable() const noexcept { return variable_; }

 private:
  std::size_t basis_index_;
  std::size_t variable_;
};

class SpliceNotApplicable : public Error {
 public:
  using Error::Error;
};

class SpliceVerificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace idealgb

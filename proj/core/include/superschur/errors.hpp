#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superschur {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebra failed validation (grading, skew symmetry, Jacobi, basis order).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class GradingError : public ValidationError {
 public:
  GradingError(std::size_t i, std::size_t j, std::size_t k)
      : ValidationError("bracket [e" + std::to_string(i) + ",e" + std::to_string(j) +
                        "] has a nonzero coordinate at e" + std::to_string(k) +
                        " of the wrong parity"),
        i_(i), j_(j), k_(k) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }

 private:
  std::size_t i_, j_, k_;
};

class SkewSymmetryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BasisOrderError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class JacobiError : public ValidationError {
 public:
  JacobiError(std::size_t i, std::size_t j, std::size_t k, std::string residual)
      : ValidationError("super Jacobi identity fails on (e" + std::to_string(i) + ",e" +
                        std::to_string(j) + ",e" + std::to_string(k) + "), residual " + residual),
        i_(i), j_(j), k_(k), residual_(std::move(residual)) {}
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }
  const std::string& residual() const { return residual_; }

 private:
  std::size_t i_, j_, k_;
  std::string residual_;
};

class ParentMismatch : public Error {
 public:
  ParentMismatch() : Error("subspaces belong to different algebras") {}
};

class NonHomogeneous : public Error {
 public:
  using Error::Error;
  NonHomogeneous() : Error("element is not homogeneous") {}
};

class NotAnIdeal : public Error {
 public:
  NotAnIdeal() : Error("subspace is not an ideal") {}
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("change-of-basis matrix is singular") {}
};

class ParityMixing : public Error {
 public:
  ParityMixing() : Error("change-of-basis matrix mixes parities") {}
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class DependentClasses : public Error {
 public:
  DependentClasses() : Error("chosen cocycles are linearly dependent modulo coboundaries") {}
};

class NotInSecondCenterMinusCenter : public Error {
 public:
  NotInSecondCenterMinusCenter() : Error("element must lie in Z2(L) but not in Z(L)") {}
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("algebra is not nilpotent") {}
};

/// Raised by the `.lsa` reader. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DuplicateIdentifier : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownIdentifier : public ParseError {
 public:
  using ParseError::ParseError;
};

class InconsistentBracket : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace superschur

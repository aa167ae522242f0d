#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace chipfire {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation (non-square, length mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised by the exact solvers when the coefficient matrix has determinant 0.
/// "No integer solution" is not an error and is reported through std::optional.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a documented limit of an exhaustive enumeration.
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-range user input.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A check that can only fail because of a bug (e.g. a certificate that does not verify).
class InternalError : public Error {
 public:
  using Error::Error;
};

class NotTotallyUnimodularError : public Error {
 public:
  NotTotallyUnimodularError(std::vector<std::size_t> rows, std::vector<std::size_t> cols,
                            std::string determinant);

  const std::vector<std::size_t>& rows() const { return rows_; }
  const std::vector<std::size_t>& cols() const { return cols_; }
  const std::string& determinant() const { return determinant_; }

 private:
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  std::string determinant_;
};

}  // namespace chipfire

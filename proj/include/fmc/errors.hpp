#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scalars from different cyclotomic fields, or objects over different
/// gradings, were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An operator that needs homogeneous arguments received a mixed-degree element.
class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

/// An identity or construction needs a product, representation or form the
/// algebra does not provide.
class MissingInput : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input-file error classes. Each maps to exit code 2 in the CLI.

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at byte " + std::to_string(position) + ")"), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

class BicharacterError : public Error {
 public:
  using Error::Error;
};

class GradingError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ScalarOrderError : public Error {
 public:
  using Error::Error;
};

}  // namespace fmc

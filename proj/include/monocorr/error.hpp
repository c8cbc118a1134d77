#pragma once

#include <stdexcept>
#include <string>

namespace monocorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two operands live on cubes (or spaces) of different dimension.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Arithmetic result does not fit the fixed-width rational representation.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Malformed descriptor, config or pins file.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class QuadratureError : public Error {
public:
  QuadratureError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

private:
  double achieved_error_;
};

}  // namespace monocorr

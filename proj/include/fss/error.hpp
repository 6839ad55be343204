#pragma once

#include <stdexcept>
#include <string>

namespace fss {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument to a pure operation (non-finite measurement, bad sample range).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed membership function, variable spec or pipeline configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent data: CSV content, shape mismatches, unknown ids.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A result violated an invariant the library guarantees.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace fss

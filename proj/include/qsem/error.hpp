#pragma once

#include <stdexcept>
#include <string>

namespace qsem {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// States and kets must be nonzero vectors.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

/// A matrix failed the Hermitian/idempotent validation.
class NotAProjectorError : public Error {
 public:
  using Error::Error;
};

/// Pre- and post-selected states are orthogonal, so the weak value has no
/// finite ratio.
class UndefinedWeakValueError : public Error {
 public:
  using Error::Error;
};

class NonCommutingError : public Error {
 public:
  using Error::Error;
};

/// Bivalent evaluation of a proposition whose state lies in neither its
/// range nor its kernel.
class BivalenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsem

#pragma once

#include <stdexcept>
#include <string>

namespace chowring {

/// Base class of every error raised by the library.
class ChowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ChowError {
 public:
  using ChowError::ChowError;
};

class DivisionByZero : public ChowError {
 public:
  DivisionByZero() : ChowError("division by the zero polynomial") {}
};

/// The quotient has a nonzero remainder over the integers.
class NotDivisible : public ChowError {
 public:
  using ChowError::ChowError;
};

class NotSymmetric : public ChowError {
 public:
  using ChowError::ChowError;
};

class NotHomogeneous : public ChowError {
 public:
  using ChowError::ChowError;
};

class UnsupportedModule : public ChowError {
 public:
  using ChowError::ChowError;
};

/// Two torus characters coincide, so localization denominators vanish.
class RepeatedRoots : public ChowError {
 public:
  using ChowError::ChowError;
};

/// Raised when an internal identity that must hold fails; indicates a bug.
class InternalInconsistency : public ChowError {
 public:
  using ChowError::ChowError;
};

}  // namespace chowring

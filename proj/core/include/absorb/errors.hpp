#pragma once

#include <stdexcept>
#include <string>

namespace absorb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

class DegenerateSimplex : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
public:
  using Error::Error;
};

class GenerationFailed : public Error {
public:
  using Error::Error;
};

class PreconditionFailed : public Error {
public:
  using Error::Error;
};

/// An operation needs irrational arithmetic (square roots) and was asked to
/// run in exact rational mode.
class ModeUnsupported : public Error {
public:
  using Error::Error;
};

}  // namespace absorb

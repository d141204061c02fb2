#pragma once

#include <stdexcept>
#include <string>

namespace slicecalc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

/// A paravector-only operation received an element outside span{1, e_1..e_m}.
class NonParavector : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class DenominatorVanishes : public Error {
 public:
  using Error::Error;
};

/// Substitution turned a denominator into the zero polynomial.
class DenominatorIdenticallyZero : public Error {
 public:
  using Error::Error;
};

class ParityViolation : public Error {
 public:
  using Error::Error;
};

class PointOutsideDomain : public Error {
 public:
  using Error::Error;
};

class IrrationalSliceRadius : public Error {
 public:
  using Error::Error;
};

class InvalidImaginaryUnit : public Error {
 public:
  using Error::Error;
};

class InvalidDomain : public Error {
 public:
  using Error::Error;
};

class PointTooCloseToAxis : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace slicecalc

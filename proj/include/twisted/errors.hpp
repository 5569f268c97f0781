#pragma once

#include <stdexcept>
#include <string>

namespace twisted {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TWISTED_DECLARE_ERROR(Name)            \
  class Name : public Error {                  \
   public:                                     \
    using Error::Error;                        \
  }

// Novikov arithmetic.
TWISTED_DECLARE_ERROR(ZeroUpToPrecision);
TWISTED_DECLARE_ERROR(ZeroDivision);
TWISTED_DECLARE_ERROR(NotExact);
TWISTED_DECLARE_ERROR(InsufficientPrecision);

// Rings and complexes.
TWISTED_DECLARE_ERROR(RankMismatch);
TWISTED_DECLARE_ERROR(RingMismatch);
TWISTED_DECLARE_ERROR(NotChainMap);
TWISTED_DECLARE_ERROR(InvalidComplex);
TWISTED_DECLARE_ERROR(Unclassified);

// Torus bundles.
TWISTED_DECLARE_ERROR(NotUnimodular);
TWISTED_DECLARE_ERROR(FiberPairingZero);

// Serialization.
TWISTED_DECLARE_ERROR(ParseError);

#undef TWISTED_DECLARE_ERROR

}  // namespace twisted

#pragma once

#include <stdexcept>
#include <string>

namespace lcsc {

//! Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! compose() called on a pair with src/rng mismatch.
struct NotComposableError : Error {
  using Error::Error;
};

//! The requested value exists in the ambient (infinite) category but falls
//! outside the stored length truncation.
struct BeyondHorizonError : Error {
  using Error::Error;
};

//! An argument lies outside the domain required by the operation.
struct DomainError : Error {
  using Error::Error;
};

//! Structural invariants of an input failed to verify.
struct ValidationError : Error {
  using Error::Error;
};

//! Malformed description file.
struct ParseError : Error {
  using Error::Error;
};

//! An enumeration exceeded its configured cap.
struct TooLargeError : Error {
  using Error::Error;
};

//! Bad parameters passed to a fixture generator.
struct BadParamsError : Error {
  using Error::Error;
};

//! factorize() hypotheses were violated; the witness is a counterexample.
struct NoFactorizationError : Error {
  using Error::Error;
};

//! A property checker was invoked without its precondition established.
struct PreconditionError : Error {
  using Error::Error;
};

//! Unknown property name passed to run_check.
struct UnknownPropertyError : Error {
  using Error::Error;
};

//! Generator-mode loading could not close the composition table within the
//! declared horizon (or could not prove confluence of the relations).
struct HorizonError : Error {
  using Error::Error;
};

}  // namespace lcsc

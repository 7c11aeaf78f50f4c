#ifndef BSATO_ERRORS_HPP
#define BSATO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsato {

// Typed error hierarchy. Each class maps to a distinct CLI exit code (job.hpp).

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input could not be parsed (expressions, certificates, job options).
struct ParseError : Error {
  using Error::Error;
};

// A step budget or scan cap was exceeded. Never a wrong answer.
struct ResourceError : Error {
  using Error::Error;
};

// b0 has roots outside Q; the rational-roots-only pipeline cannot continue.
struct IrrationalRootsError : Error {
  using Error::Error;
};

// The rationality reduction found a coefficient ratio that is not a rational
// constant modulo Q. Signals a violated hypothesis, reported, never silent.
struct NotGenericallyRationalError : Error {
  using Error::Error;
};

// The closed set at hand cannot be split into prime components by the
// supported factorization class.
struct DecompositionUnsupportedError : Error {
  using Error::Error;
};

// A certificate violates its structural preconditions.
struct MalformedCertificateError : Error {
  using Error::Error;
};

}  // namespace bsato

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace phanoi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A move generator produced a move that is not legal in the current state.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// A closed-form expression evaluated to a non-integer.
class NonIntegralClosedForm : public Error {
 public:
  using Error::Error;
};

// Requested graph/oracle size is beyond the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class CertificateInvalid : public Error {
 public:
  using Error::Error;
};

class ColoringFailed : public Error {
 public:
  using Error::Error;
};

class WitnessFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace phanoi

#pragma once

#include <stdexcept>
#include <string>

namespace medq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class AmbiguousOrientation : public Error {
 public:
  using Error::Error;
};

class NotAlternating : public Error {
 public:
  using Error::Error;
};

class NonUnitT : public Error {
 public:
  using Error::Error;
};

class HalfIntegral : public Error {
 public:
  using Error::Error;
};

class InfiniteUnsupported : public Error {
 public:
  using Error::Error;
};

// Raised when an enumeration would exceed a configured size bound.
class SizeCap : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class NotSubmodule : public Error {
 public:
  using Error::Error;
};

}  // namespace medq

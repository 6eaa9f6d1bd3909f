#pragma once

#include <stdexcept>
#include <string>

namespace segopt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be parsed (segment files, solution files).
class ParseError : public Error {
 public:
  using Error::Error;
};

class DegenerateSegmentError : public Error {
 public:
  using Error::Error;
};

class DuplicateIdError : public Error {
 public:
  using Error::Error;
};

class UnknownIdError : public Error {
 public:
  using Error::Error;
};

// Two parallel segments share more than a single point.
class OverlapError : public Error {
 public:
  using Error::Error;
};

// Three or more segments pass through a common point.
class GeneralPositionError : public Error {
 public:
  using Error::Error;
};

class ExtensionBlockedError : public Error {
 public:
  using Error::Error;
};

class NotBipartiteError : public Error {
 public:
  using Error::Error;
};

class NotTriangleFreeError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidK : public Error {
 public:
  using Error::Error;
};

}  // namespace segopt

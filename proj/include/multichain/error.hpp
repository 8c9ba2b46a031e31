#pragma once

#include <stdexcept>
#include <string>

namespace multichain {

// Base of every error raised by the library. The CLI maps these onto exit
// code 2 (usage/ring errors) unless stated otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotEnumerable : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class NotAField : public Error {
 public:
  using Error::Error;
};

class CompositionNotZero : public Error {
 public:
  using Error::Error;
};

class CapTooLow : public Error {
 public:
  using Error::Error;
};

class NotExact : public Error {
 public:
  using Error::Error;
};

class MalformedDiagonal : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace multichain

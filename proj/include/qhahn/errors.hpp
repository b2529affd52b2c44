#pragma once

#include <stdexcept>
#include <string>

namespace qhahn {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class MissingAssignment : public Error {
public:
  using Error::Error;
};

class NotInvertible : public Error {
public:
  using Error::Error;
};

// A sum has no bound from degree caps, nilpotency or a terminating parameter.
class NonTerminating : public Error {
public:
  using Error::Error;
};

class DenominatorPole : public Error {
public:
  using Error::Error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class NonConvergent : public Error {
public:
  using Error::Error;
};

class UnknownCheck : public Error {
public:
  using Error::Error;
};

} // namespace qhahn

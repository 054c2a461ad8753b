#pragma once

#include <stdexcept>
#include <string>

namespace gotzrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The polynomial has no Gotzmann representation (or is not numerical).
class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantViolated : public Error {
 public:
  using Error::Error;
};

/// No lex submodule realizes the requested Hilbert function.
class NotAchievable : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class RecursionLimit : public Error {
 public:
  using Error::Error;
};

class NotStable : public Error {
 public:
  using Error::Error;
};

class ZeroModule : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class NonIntegralChern : public Error {
 public:
  using Error::Error;
};

}  // namespace gotzrep

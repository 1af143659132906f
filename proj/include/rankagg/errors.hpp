#pragma once

#include <stdexcept>
#include <string>

namespace rankagg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (unknown alternative, bad cell, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A solver failed to reach its tolerance within budget.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A correlation is undefined because one ranking is a single tie.
class DegenerateRanking : public Error {
 public:
  using Error::Error;
};

/// An exact search was requested beyond its supported size.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

/// A Markov transition matrix was requested for a one-member league.
class SingletonLeague : public Error {
 public:
  using Error::Error;
};

}  // namespace rankagg

#pragma once

#include <stdexcept>
#include <string>

namespace tpg {

// All engine errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad syntax, duplicates, invariant violations.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A move that the rules of the current game do not allow.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

// Asked for a winning move from a position that does not grant the objective.
class LosingPosition : public Error {
 public:
  using Error::Error;
};

// Solver caps (domain size, depth) exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// An agent returned a move that is not legal in the position it was given.
class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

// Session id not known to the session manager.
class UnknownSession : public Error {
 public:
  using Error::Error;
};

// A move submitted when it is not the submitter's turn, or after the game ended.
class OutOfTurn : public Error {
 public:
  using Error::Error;
};

}  // namespace tpg

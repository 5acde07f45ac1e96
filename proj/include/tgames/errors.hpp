#pragma once

#include <stdexcept>
#include <string>

namespace tgames {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An iteration or expansion budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string budget, std::string detail)
      : Error(budget + " exceeded: " + detail), budget_(std::move(budget)) {}
  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

/// A hard cap of an exhaustive oracle would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class Cancelled : public Error {
 public:
  Cancelled() : Error("cancelled by caller") {}
};

class NonMonotoneInstance : public Error {
 public:
  using Error::Error;
};

class NotDeclining : public Error {
 public:
  using Error::Error;
};

class NotImproving : public Error {
 public:
  using Error::Error;
};

class DeadlockVertex : public Error {
 public:
  using Error::Error;
};

class StrategyUnavailableMove : public Error {
 public:
  using Error::Error;
};

class NotWinning : public Error {
 public:
  using Error::Error;
};

class TargetHasOutEdges : public Error {
 public:
  using Error::Error;
};

class TargetNotP1 : public Error {
 public:
  using Error::Error;
};

class UnsupportedInstance : public Error {
 public:
  using Error::Error;
};

/// An internal invariant of an algorithm was observed to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tgames

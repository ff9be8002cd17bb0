#pragma once

#include <stdexcept>
#include <string>

namespace thetaq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coordinate vector fails a_1 >= ... >= a_p or a_{p+1} >= ... >= a_{p+q}.
class DominanceError : public Error {
 public:
  using Error::Error;
};

/// Malformed level pattern (text or structure).
class PatternError : public Error {
 public:
  using Error::Error;
};

/// Symmetric pair incompatible with the signature, or an impossible shape.
class PairError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The search visited more nodes than its configured budget allows.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(unsigned long long budget)
      : Error("node budget exceeded (" + std::to_string(budget) + " nodes)"),
        budget_(budget) {}

  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long budget_;
};

}  // namespace thetaq

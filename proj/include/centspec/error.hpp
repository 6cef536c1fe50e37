#pragma once

#include <stdexcept>
#include <string>

namespace centspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Raised when a construction needs a non-central element and none exists.
class AbelianGroup : public Error {
 public:
  using Error::Error;
};

class NotCliqueUnion : public Error {
 public:
  using Error::Error;
};

class MissingZero : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace centspec

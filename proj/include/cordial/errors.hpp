#pragma once

#include <stdexcept>
#include <string>

namespace cordial {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sizes of two related objects disagree (labeling vs. graph, cube vs. cube).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An object violates a structural invariant (self-loop, not a hypercube, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument is outside the accepted range.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operation is undefined on the given input (e.g. a digraph with a digon).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A lookup table (bijections, cube library) is missing an entry.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A search would exceed its configured work budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace cordial

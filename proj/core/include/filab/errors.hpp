#pragma once

#include <stdexcept>
#include <string>

namespace filab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// chain validation
struct NegativeEntry : Error {
  using Error::Error;
};
struct RowSumError : Error {
  using Error::Error;
};
struct NotIrreducible : Error {
  using Error::Error;
};
struct NotReversible : Error {
  using Error::Error;
};
struct StationarityError : Error {
  using Error::Error;
};

// generators
struct InvalidParams : Error {
  using Error::Error;
};
struct DisconnectedSample : Error {
  using Error::Error;
};

// functionals / semigroup
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NegativeValue : Error {
  using Error::Error;
};
struct NonPositive : Error {
  using Error::Error;
};
struct NegativeArgument : Error {
  using Error::Error;
};
struct NegativeTime : Error {
  using Error::Error;
};
struct TrivialChain : Error {
  using Error::Error;
};

// solvers
struct NoConvergence : Error {
  using Error::Error;
};
struct KernelViolation : Error {
  using Error::Error;
};
struct LPInfeasible : Error {
  using Error::Error;
};
struct NotProbability : Error {
  using Error::Error;
};
struct InputMismatch : Error {
  using Error::Error;
};
struct NotApplicable : Error {
  using Error::Error;
};

// io
struct ParseError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};

}  // namespace filab

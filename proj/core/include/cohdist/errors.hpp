#pragma once

#include <stdexcept>
#include <string>

namespace cohdist {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// eigh / trace_norm received a matrix that is not Hermitian within tolerance.
class NotHermitianError final : public Error {
public:
  using Error::Error;
};

// Two operands have incompatible dimensions.
class DimensionMismatchError final : public Error {
public:
  using Error::Error;
};

// A state (or parsed file) violates the density-matrix invariants. The
// message names the violated invariant and the measured residual.
class ValidationError final : public Error {
public:
  using Error::Error;
};

// Coefficient grid of a Schmidt-correlated state is not a density matrix.
class InvalidCoefficientsError final : public Error {
public:
  using Error::Error;
};

class InvalidParameterError final : public Error {
public:
  using Error::Error;
};

// Decomposition spec inconsistent with the state's rank.
class RankMismatchError final : public Error {
public:
  using Error::Error;
};

// Malformed input file (bad JSON, wrong shape).
class ParseError final : public Error {
public:
  using Error::Error;
};

class UnknownGeneratorError final : public Error {
public:
  using Error::Error;
};

class InvalidRangeError final : public Error {
public:
  using Error::Error;
};

// The coherence partition failed to close; signals an internal numerical
// fault, never a physics outcome.
class PartitionViolationError final : public Error {
public:
  using Error::Error;
};

}  // namespace cohdist

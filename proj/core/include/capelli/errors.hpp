#pragma once

#include <stdexcept>
#include <string>

namespace capelli {

// Base class for every error the engine raises on a violated precondition.
// Failed mathematical checks are *not* errors; they come back as CheckReport.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};
struct NonSeparableDenominator : Error {
  explicit NonSeparableDenominator(const std::string& what)
      : Error("non-separable denominator: " + what) {}
};
struct PoleAtPoint : Error {
  explicit PoleAtPoint(const std::string& what) : Error("pole at point: " + what) {}
};
struct SignatureMismatch : Error {
  SignatureMismatch() : Error("elements belong to different algebra signatures") {}
};
struct DependsOnV : Error {
  explicit DependsOnV(const std::string& what) : Error("element depends on v: " + what) {}
};
struct NotPolynomialInU : Error {
  explicit NotPolynomialInU(const std::string& what)
      : Error("coefficient is not polynomial in u: " + what) {}
};
struct NotSquare : Error {
  NotSquare() : Error("matrix is not square") {}
};
struct BadPermutation : Error {
  explicit BadPermutation(const std::string& what) : Error("bad permutation: " + what) {}
};
struct WeightMismatch : Error {
  explicit WeightMismatch(const std::string& what) : Error("weight mismatch: " + what) {}
};
struct NotWeightPreserving : Error {
  explicit NotWeightPreserving(const std::string& what)
      : Error("operator does not preserve the weight gradings: " + what) {}
};
struct ContainsFormalVariable : Error {
  explicit ContainsFormalVariable(const std::string& what)
      : Error("element contains a formal variable: " + what) {}
};
struct RepeatedParameters : Error {
  explicit RepeatedParameters(const std::string& what)
      : Error("parameters must be pairwise distinct: " + what) {}
};
struct NonCommutingInputs : Error {
  explicit NonCommutingInputs(const std::string& what)
      : Error("operators do not commute exactly: " + what) {}
};
struct DegenerateCombination : Error {
  DegenerateCombination()
      : Error("random operator combination degenerate after max reseed attempts") {}
};
struct NotAnEigenvector : Error {
  explicit NotAnEigenvector(const std::string& what)
      : Error("vector fails the eigenvector residual test: " + what) {}
};
struct DimensionCap : Error {
  explicit DimensionCap(const std::string& what)
      : Error("weight-space dimension exceeds the configured cap: " + what) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error("config: " + what) {}
};

}  // namespace capelli

#ifndef FALCERT_ERRORS_HPP
#define FALCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace falcert {

// Base class for all certification errors.  The CLI maps InvalidInput-like
// errors to exit code 2, InternalError to exit code 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
  using Error::Error;
};

// An invariant breach inside the library itself; always a bug.
struct InternalError : Error {
  using Error::Error;
};

// lattice
struct DegenerateLattice : InvalidInput {
  DegenerateLattice() : InvalidInput("lattice basis is degenerate (det = 0)") {}
};
struct NoMatchingForm : InternalError {
  explicit NoMatchingForm(const std::string& what) : InternalError(what) {}
};
struct HypothesisViolated : Error {
  explicit HypothesisViolated(const std::string& what) : Error(what) {}
};
struct BoundViolated : InternalError {
  explicit BoundViolated(const std::string& what) : InternalError(what) {}
};

// interval arithmetic: a certified comparison could not be decided.
struct AmbiguousComparison : Error {
  explicit AmbiguousComparison(const std::string& what) : Error(what) {}
};

// cusp
struct MissingCuspData : InvalidInput {
  explicit MissingCuspData(const std::string& what) : InvalidInput(what) {}
};
struct ZeroQ : InvalidInput {
  ZeroQ() : InvalidInput("slope denominator q must be nonzero") {}
};
struct InvalidM : InvalidInput {
  InvalidM() : InvalidInput("planar tiling needs m >= 1 disk passages") {}
};

// certifier
struct OutOfRange : InvalidInput {
  explicit OutOfRange(const std::string& what) : InvalidInput(what) {}
};
struct GuardViolated : Error {
  explicit GuardViolated(const std::string& what) : Error(what) {}
};
struct NotArithmetic : InvalidInput {
  NotArithmetic() : InvalidInput("input geometry is not flagged arithmetic") {}
};
struct MissingSystole : InvalidInput {
  MissingSystole() : InvalidInput("no systole lower bound supplied") {}
};

// nerve
struct NotRedEdge : InvalidInput {
  NotRedEdge() : InvalidInput("edge is not colored red") {}
};
// Every valid nerve has a uniquely-disked crossing circle; absence means the
// input violates the nerve axioms in a way the validator cannot see.
struct NoneFound : InvalidInput {
  explicit NoneFound(const std::string& what) : InvalidInput(what) {}
};

// horoball
struct InvalidLines : InvalidInput {
  explicit InvalidLines(const std::string& what) : InvalidInput(what) {}
};

}  // namespace falcert

#endif

#pragma once
#include <stdexcept>
#include <string>

namespace chev {

// Base class for every domain error thrown by the library. CLI maps these to
// exit code 2 (usage/domain) or 1 (verification failure) as appropriate.
struct ChevError : std::runtime_error {
  explicit ChevError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

struct NonUnit : ChevError {
  explicit NonUnit(const std::string& w) : ChevError("NonUnit: " + w) {}
};
struct NotLocal : ChevError {
  explicit NotLocal(const std::string& w) : ChevError("NotLocal: " + w) {}
};
struct RingMismatch : ChevError {
  explicit RingMismatch(const std::string& w) : ChevError("RingMismatch: " + w) {}
};
struct UnsupportedType : ChevError {
  explicit UnsupportedType(const std::string& w) : ChevError("UnsupportedType: " + w) {}
};
struct BadInput : ChevError {
  explicit BadInput(const std::string& w) : ChevError("BadInput: " + w) {}
};
struct MixedSystems : ChevError {
  explicit MixedSystems(const std::string& w) : ChevError("MixedSystems: " + w) {}
};
struct NotARoot : ChevError {
  explicit NotARoot(const std::string& w) : ChevError("NotARoot: " + w) {}
};
struct NonIntegralDividedPower : ChevError {
  explicit NonIntegralDividedPower(const std::string& w)
      : ChevError("NonIntegralDividedPower: " + w) {}
};
struct NoMatch : ChevError {
  explicit NoMatch(const std::string& w) : ChevError("NoMatch: " + w) {}
};
struct NotInvolution : ChevError {
  explicit NotInvolution(const std::string& w) : ChevError("NotInvolution: " + w) {}
};
struct NotBlockSplit : ChevError {
  explicit NotBlockSplit(const std::string& w) : ChevError("NotBlockSplit: " + w) {}
};
struct PreconditionFailed : ChevError {
  explicit PreconditionFailed(const std::string& w) : ChevError("PreconditionFailed: " + w) {}
};
struct PivotNotUnit : ChevError {
  explicit PivotNotUnit(const std::string& w) : ChevError("PivotNotUnit: " + w) {}
};
struct NonvanishingConstant : ChevError {
  explicit NonvanishingConstant(const std::string& w)
      : ChevError("NonvanishingConstant: " + w) {}
};
struct PositionOutOfRange : ChevError {
  explicit PositionOutOfRange(const std::string& w) : ChevError("PositionOutOfRange: " + w) {}
};
// Internal consistency check failed: the input violated an assumption that is
// supposed to hold for every matrix the verifier manipulates.
struct StructuralFailure : ChevError {
  explicit StructuralFailure(const std::string& w) : ChevError("StructuralFailure: " + w) {}
};

// A deduction step of a replayed derivation failed; carries the step label.
struct ConstraintViolated : ChevError {
  std::string step;
  ConstraintViolated(const std::string& step_label, const std::string& w)
      : ChevError("ConstraintViolated[" + step_label + "]: " + w), step(step_label) {}
};

// Span closure stabilized below the full matrix-ring dimension.
struct ClosureStalled : ChevError {
  int stalled_dim;
  ClosureStalled(int dim, const std::string& w)
      : ChevError("ClosureStalled: " + w), stalled_dim(dim) {}
};

}  // namespace chev

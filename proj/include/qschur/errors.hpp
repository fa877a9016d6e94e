#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

// Base classes map onto the CLI exit-code contract:
//   InputError -> 2, VerificationError -> 3, InternalError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error {
  using Error::Error;
};

struct VerificationError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

struct ZeroDivisionError : InputError {
  ZeroDivisionError() : InputError("division by zero quaternion") {}
};

struct RealPointError : InputError {
  RealPointError() : InputError("real quaternion has no imaginary direction") {}
};

struct ShapeMismatchError : InputError {
  explicit ShapeMismatchError(const std::string& what) : InputError("shape mismatch: " + what) {}
};

struct NotHermitianError : InputError {
  explicit NotHermitianError(const std::string& what = "matrix is not Hermitian") : InputError(what) {}
};

struct OddMultiplicityError : InternalError {
  explicit OddMultiplicityError(const std::string& what) : InternalError(what) {}
};

struct NotPositiveError : InputError {
  explicit NotPositiveError(const std::string& what = "matrix is not positive definite") : InputError(what) {}
};

struct NotConvergentError : InputError {
  explicit NotConvergentError(const std::string& what) : InputError(what) {}
};

struct NotIsometricError : InputError {
  explicit NotIsometricError(const std::string& what = "columns are not orthonormal") : InputError(what) {}
};

struct NonInvertibleConstantTermError : InputError {
  NonInvertibleConstantTermError() : InputError("series constant term is not invertible") {}
};

struct NotOrthogonalError : InputError {
  NotOrthogonalError() : InputError("imaginary units are not orthogonal") {}
};

struct PoleSphereError : InputError {
  PoleSphereError() : InputError("evaluation point lies on the pole sphere") {}
};

struct ZeroPointError : InputError {
  ZeroPointError() : InputError("Blaschke factor requires a nonzero point") {}
};

struct NotInBallError : InputError {
  explicit NotInBallError(const std::string& what = "point is not inside the open unit ball") : InputError(what) {}
};

struct DuplicateSphereError : InputError {
  explicit DuplicateSphereError(const std::string& what) : InputError(what) {}
};

struct PlacementBreakdownError : InputError {
  explicit PlacementBreakdownError(const std::string& what) : InputError(what) {}
};

struct NotSignatureError : InputError {
  explicit NotSignatureError(const std::string& what = "matrix is not a signature matrix") : InputError(what) {}
};

struct RadiusTooLargeError : InputError {
  explicit RadiusTooLargeError(const std::string& what) : InputError(what) {}
};

struct NotPDError : InputError {
  explicit NotPDError(const std::string& what) : InputError(what) {}
};

struct OverlappingSpheresError : InputError {
  explicit OverlappingSpheresError(const std::string& what) : InputError(what) {}
};

struct NodeOutsideBallError : InputError {
  explicit NodeOutsideBallError(const std::string& what) : InputError(what) {}
};

struct RelationNotSatisfiedError : InputError {
  explicit RelationNotSatisfiedError(const std::string& what) : InputError(what) {}
};

struct NotCoisometryError : InputError {
  explicit NotCoisometryError(const std::string& what = "V is not a co-isometry") : InputError(what) {}
};

}  // namespace qschur

#pragma once
#include <stdexcept>
#include <string>

namespace drac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NormViolation : Error { using Error::Error; };
struct ProbabilityOutOfRange : Error { using Error::Error; };
struct InadmissibleRotation : Error { using Error::Error; };
struct InvalidChannel : Error { using Error::Error; };
struct InvalidState : Error { using Error::Error; };
struct InvalidStrategy : Error { using Error::Error; };
struct QOutOfRange : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct LabelMismatch : Error { using Error::Error; };
struct UnknownTask : Error { using Error::Error; };
struct UnknownRotation : Error { using Error::Error; };

}  // namespace drac

#pragma once

#include <stdexcept>
#include <string>

namespace qchu {

/// Base class for all qchu-kit errors. CLI maps these to exit code 2.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CycleError : Error {
  using Error::Error;
};
struct NoBottomError : Error {
  using Error::Error;
};
struct NoMeetError : Error {
  using Error::Error;
};
struct AmbiguousJoinError : Error {
  using Error::Error;
};
struct UnknownAxiomError : Error {
  using Error::Error;
};
struct SizeLimitError : Error {
  using Error::Error;
};
struct NoBottomRowError : Error {
  using Error::Error;
};
struct NotPrincipalError : Error {
  using Error::Error;
};
struct ConsistentPairError : Error {
  using Error::Error;
};
struct NotQuasiClassicalError : Error {
  using Error::Error;
};
struct JoinError : Error {
  using Error::Error;
};
struct DomainMismatchError : Error {
  using Error::Error;
};
struct MissingConjugateError : Error {
  using Error::Error;
};
struct NotOrthocomplementError : Error {
  using Error::Error;
};
struct EmptyPerpError : Error {
  using Error::Error;
};
struct RangeError : Error {
  using Error::Error;
};
struct NotProjectiveLatticeError : Error {
  using Error::Error;
};
struct SpaceMismatchError : Error {
  using Error::Error;
};
struct PartialityMismatchError : Error {
  using Error::Error;
};
struct EmptyFilterError : Error {
  using Error::Error;
};

/// Malformed input file; `pointer` is a JSON-pointer path into the document.
struct SchemaError : Error {
  std::string pointer;
  SchemaError(const std::string& ptr, const std::string& msg)
      : Error(ptr + ": " + msg), pointer(ptr) {}
};

}  // namespace qchu

#pragma once

#include <stdexcept>
#include <string>

namespace pangular {

/// Base class for all library errors. `code()` is a stable one-word
/// identifier suitable for machine-readable diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct DimensionMismatchError : Error {
  explicit DimensionMismatchError(const std::string& what)
      : Error("DimensionMismatch", what) {}
};

struct NonFiniteError : Error {
  explicit NonFiniteError(const std::string& what) : Error("NonFinite", what) {}
};

struct TripleInfeasibleError : Error {
  explicit TripleInfeasibleError(const std::string& what)
      : Error("TripleInfeasible", what) {}
};

struct ZeroVectorError : Error {
  explicit ZeroVectorError(const std::string& what) : Error("ZeroVector", what) {}
};

struct DegenerateTripleError : Error {
  explicit DegenerateTripleError(const std::string& what)
      : Error("DegenerateTriple", what) {}
};

struct ParamOutOfDomainError : Error {
  explicit ParamOutOfDomainError(const std::string& what)
      : Error("ParamOutOfDomain", what) {}
};

struct NoConvergenceError : Error {
  explicit NoConvergenceError(const std::string& what)
      : Error("NoConvergence", what) {}
};

struct UnknownPropertyError : Error {
  explicit UnknownPropertyError(const std::string& what)
      : Error("UnknownProperty", what) {}
};

struct DimensionTooSmallError : Error {
  explicit DimensionTooSmallError(const std::string& what)
      : Error("DimensionTooSmall", what) {}
};

struct BadSpecError : Error {
  explicit BadSpecError(const std::string& what) : Error("BadSpec", what) {}
};

}  // namespace pangular

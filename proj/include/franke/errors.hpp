#pragma once

#include <stdexcept>
#include <string>

namespace franke {

enum class ErrorKind {
  shape_mismatch,
  period_mismatch,
  not_a_chain_map,
  differential_not_square_zero,
  not_monotone,
  not_a_functor,
  not_free,
  not_concentrated,
  not_injective,
  image_not_contained,
  hypothesis_failure,
  not_in_L,
  degeneration_failure,
  verification_failure,
  parse_error,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::period_mismatch: return "PeriodMismatch";
    case ErrorKind::not_a_chain_map: return "NotAChainMap";
    case ErrorKind::differential_not_square_zero: return "DifferentialNotSquareZero";
    case ErrorKind::not_monotone: return "NotMonotone";
    case ErrorKind::not_a_functor: return "NotAFunctor";
    case ErrorKind::not_free: return "NotFree";
    case ErrorKind::not_concentrated: return "NotConcentrated";
    case ErrorKind::not_injective: return "NotInjective";
    case ErrorKind::image_not_contained: return "ImageNotContained";
    case ErrorKind::hypothesis_failure: return "HypothesisFailure";
    case ErrorKind::not_in_L: return "NotInL";
    case ErrorKind::degeneration_failure: return "DegenerationFailure";
    case ErrorKind::verification_failure: return "VerificationFailure";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace franke

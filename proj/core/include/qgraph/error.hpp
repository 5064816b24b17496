#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgraph {

enum class ErrorCode {
  InvalidArgument,
  InvalidGraph,
  VertexOutOfRange,
  WrongKind,
  DimensionMismatch,
  NotHermitian,
  NotConverged,
  DisconnectedGraph,
  DegreeZero,
  NotPure,
  NotUnitary,
  NotHermitianResult,
  NonzeroDiagonal,
  SizeLimit,
  StabilityViolation,
  ZeroStrengthVertex,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Raised by every numerical or structural precondition failure in the library.
class ComputeError : public std::runtime_error {
 public:
  ComputeError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qgraph

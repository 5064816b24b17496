#include "qgraph/error.hpp"

namespace qgraph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotHermitianResult: return "NotHermitianResult";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::StabilityViolation: return "StabilityViolation";
    case ErrorCode::ZeroStrengthVertex: return "ZeroStrengthVertex";
  }
  return "Unknown";
}

}  // namespace qgraph

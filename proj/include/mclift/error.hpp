#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mclift {

enum class ErrorCode {
  EmptySurface,
  DegenerateFace,
  RepeatedVertexInFace,
  EdgeOverused,
  DisconnectedSkeleton,
  DisconnectedDual,
  NonManifoldVertex,
  NonManifoldBoundary,
  DuplicateId,
  UnknownVertex,
  UnknownFace,
  UnknownEdgeKey,
  ZeroLengthEdge,
  NotAdjacent,
  PreconditionViolated,
  BoundaryVertex,
  NotSelfStress,
  NotMonodromyFree,
  FoldMismatch,
  BoundaryUnresolved,
  MissingFaceHeight,
  ParameterTooSmall,
  UnknownFixture,
  ParseError,
  UnknownVertexRef,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySurface: return "EmptySurface";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::RepeatedVertexInFace: return "RepeatedVertexInFace";
    case ErrorCode::EdgeOverused: return "EdgeOverused";
    case ErrorCode::DisconnectedSkeleton: return "DisconnectedSkeleton";
    case ErrorCode::DisconnectedDual: return "DisconnectedDual";
    case ErrorCode::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorCode::NonManifoldBoundary: return "NonManifoldBoundary";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownFace: return "UnknownFace";
    case ErrorCode::UnknownEdgeKey: return "UnknownEdgeKey";
    case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BoundaryVertex: return "BoundaryVertex";
    case ErrorCode::NotSelfStress: return "NotSelfStress";
    case ErrorCode::NotMonodromyFree: return "NotMonodromyFree";
    case ErrorCode::FoldMismatch: return "FoldMismatch";
    case ErrorCode::BoundaryUnresolved: return "BoundaryUnresolved";
    case ErrorCode::MissingFaceHeight: return "MissingFaceHeight";
    case ErrorCode::ParameterTooSmall: return "ParameterTooSmall";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVertexRef: return "UnknownVertexRef";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally remember the 1-based line they occurred on.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mclift

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace txray {

/// Every failure mode the library reports. CLI maps these to machine-readable
/// error JSON on stderr; tests match on the code, not the message.
enum class ErrorCode {
  ZeroVector,
  DegenerateCone,
  EmptyInput,
  EmptyCut,
  DegenerateCut,
  NotFullDimensional,
  NonGenericLambda,
  NotDelzant,
  VerticalEdgeUnsupported,
  DuplicateFixedPoint,
  AmbiguousPairing,
  DanglingWeight,
  WallNotPerpendicular,
  VertexOnCutLine,
  NonFreeAction,
  WrongDimensionScope,
  ParseError,
  InvalidInput,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DegenerateCone: return "DegenerateCone";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyCut: return "EmptyCut";
    case ErrorCode::DegenerateCut: return "DegenerateCut";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::NonGenericLambda: return "NonGenericLambda";
    case ErrorCode::NotDelzant: return "NotDelzant";
    case ErrorCode::VerticalEdgeUnsupported: return "VerticalEdgeUnsupported";
    case ErrorCode::DuplicateFixedPoint: return "DuplicateFixedPoint";
    case ErrorCode::AmbiguousPairing: return "AmbiguousPairing";
    case ErrorCode::DanglingWeight: return "DanglingWeight";
    case ErrorCode::WallNotPerpendicular: return "WallNotPerpendicular";
    case ErrorCode::VertexOnCutLine: return "VertexOnCutLine";
    case ErrorCode::NonFreeAction: return "NonFreeAction";
    case ErrorCode::WrongDimensionScope: return "WrongDimensionScope";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Error(ErrorCode code, std::string message,
        std::map<std::string, std::string> data)
      : std::runtime_error(std::move(message)),
        code_(code),
        data_(std::move(data)) {}

  ErrorCode code() const { return code_; }

  /// Extra key/value context (determinants, JSON paths, ...).
  const std::map<std::string, std::string>& data() const { return data_; }

 private:
  ErrorCode code_;
  std::map<std::string, std::string> data_;
};

}  // namespace txray

#include "sepenum/errors.hpp"

namespace sepenum {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kInvalidTerminals: return "InvalidTerminals";
    case ErrorCode::kVertexRemoved: return "VertexRemoved";
    case ErrorCode::kTerminalInSet: return "TerminalInSet";
    case ErrorCode::kNotANeighbor: return "NotANeighbor";
    case ErrorCode::kNotAnEdge: return "NotAnEdge";
    case ErrorCode::kTerminalsAdjacent: return "TerminalsAdjacent";
    case ErrorCode::kAlreadySeparated: return "AlreadySeparated";
    case ErrorCode::kSourceSinkAdjacent: return "SourceSinkAdjacent";
    case ErrorCode::kNotASeparator: return "NotASeparator";
    case ErrorCode::kNotMinimal: return "NotMinimal";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kNotChordless: return "NotChordless";
    case ErrorCode::kVertexNotOnPath: return "VertexNotOnPath";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sepenum

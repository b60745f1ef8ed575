#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepenum {

enum class ErrorCode {
  kMalformedLine,
  kSelfLoop,
  kInvalidVertex,
  kInvalidTerminals,
  kVertexRemoved,
  kTerminalInSet,
  kNotANeighbor,
  kNotAnEdge,
  kTerminalsAdjacent,
  kAlreadySeparated,
  kSourceSinkAdjacent,
  kNotASeparator,
  kNotMinimal,
  kNotAPath,
  kNotChordless,
  kVertexNotOnPath,
  kTooLarge,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Thrown by every precondition check in the library. The code identifies
/// the violated contract so callers (the CLI in particular) can map it to
/// an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sepenum

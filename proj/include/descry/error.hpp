#pragma once

#include <stdexcept>
#include <string>

namespace descry {

enum class ErrorCode {
  // config
  DuplicateClassName,
  MissingMentionsExtractor,
  EmptyConfig,
  UnknownComponent,
  // components
  NoEntitiesConfigured,
  NoRelationsConfigured,
  MissingEntityAnnotations,
  EmptyKnowledgeBase,
  // ensemble
  InconsistentVariants,
  EmptyEnsemble,
  // datasets / metrics
  ParseError,
  SpanOutOfBounds,
  OverlappingSpans,
  DanglingRelation,
  AlignmentError,
  UnknownSplit,
  // general
  InvalidInput,
  IoError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. The code names the violated rule; the message
/// carries context (offending class name, registry key, line number, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace descry

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace celltrace {

enum class ErrorCode {
  OutOfExtent,
  FileError,
  SchemaError,
  UsersAbsent,
  MissingTier,
  DegenerateCell,
  TooFewSites,
  EmptyTrace,
  UnseenState,
  ModelAreaMissing,
  UnseenContext,
  IndexMismatch,
  InvalidK,
  GridMismatch,
  NonPositiveInput,
  TableMissing,
  NotStruggling,
  StrategyOrderViolation,
  PipelineOrderError,
  ConfigError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every module reports failures through this type; the CLI maps the code
/// to its machine-readable error document.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace celltrace

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqwell {

enum class ErrorCode {
  NonPositiveParameter,
  InvalidRoot,
  UnboundRoot,
  UnsupportedIndex,
  UnsupportedBranch,
  BranchNotBound,
  InvalidP,
  OutOfDefinitionInterval,
  OrderUnavailable,
  StepUnderflow,
  NotABoundState,
  NonPositivePeriod,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for every domain failure in the library; callers
/// dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sqwell

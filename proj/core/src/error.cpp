#include "sqwell/error.hpp"

namespace sqwell {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::InvalidRoot: return "InvalidRoot";
    case ErrorCode::UnboundRoot: return "UnboundRoot";
    case ErrorCode::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorCode::UnsupportedBranch: return "UnsupportedBranch";
    case ErrorCode::BranchNotBound: return "BranchNotBound";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::OutOfDefinitionInterval: return "OutOfDefinitionInterval";
    case ErrorCode::OrderUnavailable: return "OrderUnavailable";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::NotABoundState: return "NotABoundState";
    case ErrorCode::NonPositivePeriod: return "NonPositivePeriod";
  }
  return "Unknown";
}

}  // namespace sqwell

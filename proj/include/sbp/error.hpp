#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbp {

enum class ErrorCode {
  NotIdentity,
  NotAssociative,
  IndexOutOfRange,
  DimensionMismatch,
  DomainMismatch,
  CodomainMismatch,
  CarrierMismatch,
  MiddleMismatch,
  SizeTooLarge,
  NotAGroup,
  NotAHomomorphism,
  NotASubmonoid,
  SectionNotSplitting,
  KernelMismatch,
  PreimageNotFound,
  InvalidSemibiproduct,
  InvalidActionSystem,
  UnknownName,
  ParseError,
};

const char* to_string(ErrorCode code);

// Structural failure: a value could not be built or an operation's
// precondition does not hold. Carries named integer witnesses, e.g.
// {"i",1},{"j",2} for the cell where associativity breaks. Law checks on
// well-formed values never throw; they return reports instead.
class Error : public std::runtime_error {
 public:
  using Detail = std::pair<std::string, long>;

  Error(ErrorCode code, const std::string& message,
        std::vector<Detail> details = {})
      : std::runtime_error(message), code_(code),
        details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Detail>& details() const noexcept { return details_; }

 private:
  ErrorCode code_;
  std::vector<Detail> details_;
};

}  // namespace sbp

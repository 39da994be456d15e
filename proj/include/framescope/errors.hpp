#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framescope {

enum class Errc {
  InvalidArgument,
  InvalidWindow,
  DomainViolation,
  NotRealValued,
  NonSquare,
  NonPositiveC1,
  InconsistentFlags,
  UnboundedWindow,
  DeltaTooLarge,
  TNotAdmissible,
  EmptySampleSet,
  SizeLimitExceeded,
  RankDeficient,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// Failures that come from the numbers rather than from the input.
  bool is_numerical() const noexcept { return code_ == Errc::RankDeficient; }

 private:
  Errc code_;
};

}  // namespace framescope

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linespace {

enum class Errc {
  BadInput,
  Asymmetric,
  ZeroOffDiagonal,
  NonzeroDiagonal,
  NegativeDistance,
  TriangleViolation,
  Disconnected,
  SamePoint,
  BadParams,
  NoValidParams,
  OddP,
  TooLarge,
  NotThreeUniform,
  Overflow,
  TheoremViolated,
  BoundViolated,
  SelfCheckFailed,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending indices or parameters.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace linespace

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ternalg {

enum class Errc {
  DimensionMismatch,
  DimensionCap,
  SingularMatrix,
  MissingTensor,
  ArityMismatch,
  InvalidBundle,
  MissingRep,
  NotATrace,
  NotRelativeRB,
  NotRotaBaxter,
  NotNijenhuis,
  NotCoherent,
  NotSkew,
  NotSymplectic,
  ParseError,
  UnknownName,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ternalg

#pragma once

#include <stdexcept>
#include <string>

namespace entbound {

enum class Errc {
  BadDims,
  NotHermitian,
  NotUnitTrace,
  NotPositive,
  NotNormalized,
  IndexOutOfRange,
  NotPhysical,
  NoConvergence,
  DegenerateChi,
  NegativeAlpha,
  EpsOutOfRange,
  BaseNotBoundEntangled,
  InvalidRange,
  ParseError,
  IoError,
};

const char* to_string(Errc code);

/// Library exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace entbound

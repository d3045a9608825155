#pragma once

#include <stdexcept>
#include <string>

namespace hq8 {

enum class ErrorCode {
  InvalidArgument,
  SpaceMismatch,
  Parse,
  SizeCap,
  NotHadamard,
  Unclassifiable,
  CaseMismatch,
  NotAllowable,
  Infeasible,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hq8

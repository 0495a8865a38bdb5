#pragma once

#include <stdexcept>
#include <string>

namespace grasshard {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  Numerical,
  NotImplemented,
  NoPath,
  Internal,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this exception; the C API maps
// the code onto gh_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::InvalidArgument, message);
}

}  // namespace grasshard

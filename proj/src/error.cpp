#include "grasshard/error.hpp"

namespace grasshard {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Numerical: return "numerical failure";
    case ErrorCode::NotImplemented: return "not implemented";
    case ErrorCode::NoPath: return "no conversion path";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace grasshard

#pragma once

#include <stdexcept>
#include <string>

namespace azi {

enum class ErrorCode {
  invalid_argument,  // bad construction input, precondition violation
  parse,             // malformed graph6 / edge-list text
  degenerate_edge,   // AZI weight undefined: edge joining two degree-1 vertices
  domain,            // value outside the formula's domain (e.g. max degree < 2)
  unsupported,       // exceeds desk-scale guards (n > 64, canonical n > 16, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace azi

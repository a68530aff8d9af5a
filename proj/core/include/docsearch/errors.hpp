#pragma once

#include <stdexcept>
#include <string>

namespace docsearch {

enum class ErrorCode {
  validation,
  duplicate,
  not_found,
  io,
  corrupt,
  state,
  protocol,
  timeout,
  capability,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace docsearch

#pragma once

#include <stdexcept>
#include <string>

namespace uqpool {

enum class ErrorCategory {
  kUsage,      // bad arguments / flag combinations
  kIo,         // filesystem failures
  kFormat,     // malformed input data
  kInvariant,  // domain invariant violated
  kNetwork,    // transport-level failures
  kConfig,     // bad configuration values
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

  const char* category_name() const {
    switch (category_) {
      case ErrorCategory::kUsage: return "usage";
      case ErrorCategory::kIo: return "io";
      case ErrorCategory::kFormat: return "format";
      case ErrorCategory::kInvariant: return "invariant";
      case ErrorCategory::kNetwork: return "network";
      case ErrorCategory::kConfig: return "config";
    }
    return "unknown";
  }

 private:
  ErrorCategory category_;
};

}  // namespace uqpool

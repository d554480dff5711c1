#pragma once

#include <string>

namespace txray {

inline constexpr const char* kToolName = "txray";
inline constexpr const char* kToolVersion = "0.1.0";

inline std::string tool_string() {
  return std::string(kToolName) + " " + kToolVersion;
}

}  // namespace txray

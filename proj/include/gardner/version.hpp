#pragma once

namespace gardner {

inline constexpr const char* kToolName = "gardner";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace gardner

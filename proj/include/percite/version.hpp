#pragma once

namespace percite {

inline constexpr const char* kToolName = "percite";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace percite

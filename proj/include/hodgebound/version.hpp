#pragma once

namespace hodgebound {

inline constexpr const char* kToolName = "hodgebound";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace hodgebound

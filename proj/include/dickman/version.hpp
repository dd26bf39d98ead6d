#pragma once

namespace dickman {

inline constexpr const char* kToolName = "dickman-lab";
inline constexpr const char* kToolVersion = "1.0.0";

} // namespace dickman

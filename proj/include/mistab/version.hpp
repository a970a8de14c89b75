#pragma once

namespace mistab {

inline constexpr const char* kToolName = "mistab";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace mistab

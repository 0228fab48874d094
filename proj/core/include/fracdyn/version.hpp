#pragma once

namespace fracdyn {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kToolName = "fracdyn";

} // namespace fracdyn

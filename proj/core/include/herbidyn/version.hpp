#pragma once

namespace herbidyn {

// Keep in step with the top-level CMake project version.
inline constexpr const char* kVersion = "0.1.0";

}  // namespace herbidyn

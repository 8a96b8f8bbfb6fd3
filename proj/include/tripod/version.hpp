#pragma once

namespace tripod {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tripod

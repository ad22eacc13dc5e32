#pragma once

namespace trendlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace trendlab

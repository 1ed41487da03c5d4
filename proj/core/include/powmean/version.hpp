#pragma once

namespace powmean {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace powmean

#pragma once

namespace sawsine {

inline constexpr const char* version = "0.1.0";

}  // namespace sawsine

#pragma once

namespace quip {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace quip

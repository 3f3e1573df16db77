#pragma once

namespace burnout {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace burnout

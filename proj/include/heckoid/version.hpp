#pragma once

namespace heckoid {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace heckoid

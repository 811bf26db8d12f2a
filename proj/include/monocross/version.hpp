#pragma once

namespace monocross {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace monocross

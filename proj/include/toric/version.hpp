#pragma once

namespace toric {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace toric

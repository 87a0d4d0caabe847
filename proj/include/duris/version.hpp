#pragma once

namespace duris {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace duris

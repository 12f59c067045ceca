#pragma once

namespace yaogame {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace yaogame

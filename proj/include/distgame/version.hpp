#pragma once

namespace distgame {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace distgame

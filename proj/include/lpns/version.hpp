#pragma once

namespace lpns {

inline constexpr const char* version_string = "lpns 0.1.0";

}  // namespace lpns

#pragma once

namespace kring {

inline constexpr const char* version_string = "0.1.0";
inline constexpr const char* tool_name = "kring";

}

#pragma once

namespace filmwave {

inline constexpr const char* version_string = "filmwave 0.1.0";

}  // namespace filmwave

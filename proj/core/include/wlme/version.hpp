#pragma once

namespace wlme {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wlme

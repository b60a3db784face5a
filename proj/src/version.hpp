#pragma once

namespace corr13 {

inline constexpr const char* kVersion = "0.1.0";

} // namespace corr13

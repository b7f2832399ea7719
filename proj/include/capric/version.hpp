#pragma once

namespace capric {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace capric

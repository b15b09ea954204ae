#pragma once

namespace modent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace modent

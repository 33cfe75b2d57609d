#pragma once

#include <string_view>

namespace hadfact {

inline constexpr std::string_view kToolName = "hadfact";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace hadfact

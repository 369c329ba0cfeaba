#pragma once

namespace gbp {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace gbp

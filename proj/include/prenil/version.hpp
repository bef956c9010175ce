#pragma once

namespace prenil {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace prenil

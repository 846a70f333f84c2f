#pragma once

namespace iesat {

inline constexpr const char* kVersion = "0.1.0";

} // namespace iesat

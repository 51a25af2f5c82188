#pragma once

namespace kummer {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace kummer

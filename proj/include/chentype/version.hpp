#pragma once

namespace chentype {

inline constexpr const char* kVersion = "1.0.0";

} // namespace chentype

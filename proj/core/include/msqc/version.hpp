#pragma once

namespace msqc {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace msqc

#pragma once

namespace seqcc {

inline constexpr const char* kVersion = "0.1.0";

} // namespace seqcc

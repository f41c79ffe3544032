#pragma once

namespace lpsign {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace lpsign

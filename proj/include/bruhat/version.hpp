#pragma once

namespace bruhat {

inline constexpr const char* kVersion = "0.1.0";
// Version of every JSON document the tool writes.
inline constexpr int kSchema = 1;

}  // namespace bruhat

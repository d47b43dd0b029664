#pragma once

namespace qrst {
inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kJsonSchemaVersion = 1;
} // namespace qrst

#pragma once

namespace hgate {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchemaGate = "hgate.gate/1";
inline constexpr const char* kSchemaSweep = "hgate.sweep/1";
inline constexpr const char* kSchemaErrata = "hgate.errata/1";

} // namespace hgate

#pragma once

namespace jetchern {

inline constexpr const char* kVersion = "1.0.0";

// Bump when any output-affecting computation changes; cache keys include it.
inline constexpr int kArtifactVersion = 1;

}  // namespace jetchern

#pragma once

namespace kirchhoff {

inline constexpr const char* kVersion = "0.1.0";

// Stream identities recorded in run manifests. Changing either constant
// invalidates every seed ever written to a records CSV, so they are
// versioned explicitly.
inline constexpr const char* kRngId = "splitmix64-1.0";
inline constexpr const char* kSeedHashId = "fnv1a-64";

}  // namespace kirchhoff

#pragma once

namespace parallax {

inline constexpr const char* kToolVersion = "0.1.0";
// Bump when a check is added, removed, or its predicate/sampling changes:
// reports are only comparable at equal catalogue versions.
inline constexpr const char* kCatalogueVersion = "1";

}  // namespace parallax

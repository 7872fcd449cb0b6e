#pragma once

namespace swanson {

inline constexpr const char* kToolName = "swanson";
inline constexpr const char* kToolVersion = "1.0.0";

// Every analytic identity in the toolkit is derived under this convention.
// The sign of the hermitizing Gaussian generator depends on it.
inline constexpr const char* kConvention =
    "a = (x+ip)/sqrt(2), [x,p] = i, [a,a+] = 1, hbar = 1";

}  // namespace swanson

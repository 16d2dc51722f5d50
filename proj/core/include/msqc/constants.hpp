#pragma once

namespace msqc {

/// Speed of light in vacuum, m/s (CODATA exact value).
inline constexpr double kSpeedOfLight = 299'792'458.0;

/// Rounded c = 3e8 m/s used by most back-of-envelope coherence estimates.
/// Selecting it reproduces the quoted platform numbers digit for digit.
inline constexpr double kSpeedOfLightLegacy = 3.0e8;

}  // namespace msqc

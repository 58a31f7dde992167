#pragma once

namespace filmwave {

// Gaussian-CGS throughout: lengths in cm, times in s, conductivity in 1/s,
// impedances and P-factors dimensionless.
inline constexpr double speed_of_light = 2.99792458e10;  // cm/s

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double half_pi = pi / 2.0;

// Complex denominators with modulus below this are treated as degenerate
// and raise numerical_error instead of producing infinities.
inline constexpr double denominator_floor = 1e-30;

}  // namespace filmwave

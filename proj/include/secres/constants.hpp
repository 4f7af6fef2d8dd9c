#pragma once

#include <numbers>

namespace secres {

// Internal units throughout: solar mass, astronomical unit, Julian year.
// The gravitational constant is exact in these units by Kepler's third law
// applied to a 1 Msun / 1 AU / 1 yr orbit.
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kG = 4.0 * kPi * kPi;

// c = 299792458 m/s with AU = 1.495978707e11 m and yr = 365.25 * 86400 s.
inline constexpr double kCLight = 63241.0773;

struct Constants {
  double G = kG;       // AU^3 yr^-2 Msun^-1
  double c = kCLight;  // AU / yr
};

}  // namespace secres

#pragma once

// Shared test utilities: a small deterministic RNG so property tests are
// reproducible without pulling in <random> distributions, plus config
// builders for the systems the tests revisit.

#include <cmath>
#include <cstdint>

#include <doctest.h>

#include "secres/elements.hpp"

namespace testutil {

// relative comparison that stays meaningful at very small magnitudes, where
// doctest's Approx would silently turn into an absolute check
inline void check_rel(double got, double want, double tol) {
  INFO("got " << got << "  want " << want << "  rel tol " << tol);
  CHECK(std::abs(got - want) <= tol * std::abs(want));
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    // xorshift64*
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545f4914f6cdd1dull;
  }
  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

// absolute difference of two angles on the circle
inline double angle_gap(double a, double b) {
  double d = secres::reduce_angle(a - b);
  return std::min(d, secres::kTwoPi - d);
}

inline secres::SystemConfig low_e_synthetic() {
  secres::SystemConfig cfg;
  cfg.m0 = 1.0;
  cfg.planets[0].m = 1e-3;
  cfg.planets[0].elements = {1.0, 0.05, 0.0, 0.0};
  cfg.planets[1].m = 1e-3;
  cfg.planets[1].elements = {1.8, 0.05, secres::kPi / 2.0, 0.0};
  return cfg;
}

inline secres::SystemConfig hd169830() {
  secres::SystemConfig cfg;
  cfg.m0 = 1.40;
  cfg.planets[0].m = 0.0027491904;
  cfg.planets[0].elements = {0.81, 0.31, 148.0 * secres::kPi / 180.0, 0.0};
  cfg.planets[1].m = 0.0038565032;
  cfg.planets[1].elements = {3.60, 0.33, 252.0 * secres::kPi / 180.0, 0.0};
  return cfg;
}

inline secres::SystemConfig hd11964() {
  secres::SystemConfig cfg;
  cfg.m0 = 1.125;
  cfg.planets[0].m = 0.000075220904;
  cfg.planets[0].elements = {0.229, 0.30, 102.0 * secres::kPi / 180.0, 0.0};
  cfg.planets[1].m = 0.00059374876;
  cfg.planets[1].elements = {3.16, 0.041, 155.0 * secres::kPi / 180.0, 0.0};
  return cfg;
}

}  // namespace testutil

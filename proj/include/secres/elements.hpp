#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "secres/constants.hpp"

namespace secres {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }

// Planar osculating elements; angles reduced to [0, 2pi).
struct OrbitalElements {
  double a = 1.0;      // AU
  double e = 0.0;
  double varpi = 0.0;  // longitude of perihelion, rad
  double M = 0.0;      // mean anomaly, rad
};

// Heliocentric position and the momentum canonically conjugate to it.
struct BodyState {
  Vec2 r;  // AU
  Vec2 p;  // Msun AU / yr
};

enum class Model { kNewtonian, kRelativistic };

struct Planet {
  double m = 0.0;  // Msun
  OrbitalElements elements;
};

struct SystemConfig {
  double m0 = 1.0;  // Msun
  std::array<Planet, 2> planets;  // index 0 is the inner planet
  Model model = Model::kNewtonian;
  Constants constants;
};

// Secular canonical variables. Sign convention: eta carries -sin(varpi), so
// a positive secular frequency is prograde perihelion precession.
struct PoincareSecular {
  std::array<double, 2> xi{};
  std::array<double, 2> eta{};
  std::array<double, 2> Lambda{};
};

struct UnboundOrbit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduce an angle to [0, 2pi).
double reduce_angle(double x);

// Solve E - e sin E = M to |residual| <= 1e-13. Damped Newton from
// E0 = M + 0.85 e sign(sin M), bisection fallback. Throws std::domain_error
// for e outside [0, 1).
double kepler_solve(double M, double e);

// Osculating two-body state with p = mu * rdot, mu = m0 m/(m0+m),
// beta = G (m0+m).
BodyState elements_to_state(const OrbitalElements& el, double m0, double m,
                            const Constants& constants);

// Inverse of elements_to_state. Throws UnboundOrbit when the two-body energy
// is non-negative.
OrbitalElements state_to_elements(const BodyState& s, double m0, double m,
                                  const Constants& constants);

// Poincare secular pair for both planets:
//   xi_i  =  sqrt(2 Lambda_i) sqrt(1 - sqrt(1-e^2)) cos(varpi)
//   eta_i = -sqrt(2 Lambda_i) sqrt(1 - sqrt(1-e^2)) sin(varpi)
// with Lambda_i = mu_i sqrt(beta_i a_i).
PoincareSecular secular_coordinates(const SystemConfig& config);

}  // namespace secres

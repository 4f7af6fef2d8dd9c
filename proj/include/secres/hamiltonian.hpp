#pragma once

#include <array>

#include "secres/elements.hpp"

namespace secres {

struct PhaseState {
  std::array<BodyState, 2> bodies;
  double t = 0.0;  // yr
};

// Per-planet coefficient set of the c^-2 correction.
struct PnCoefficients {
  double mu = 0.0;       // m0 m / (m0 + m)
  double beta = 0.0;     // G (m0 + m)
  double upsilon = 0.0;  // m0 m / (m0 + m)^2
  double gamma1 = 0.0;   // (1 - 3 upsilon) / 8
  double gamma2 = 0.0;   // beta (3 + upsilon) / 2
  double gamma3 = 0.0;   // beta upsilon / 2
  double gamma4 = 0.0;   // beta^2 / 2
};

PnCoefficients pn_coefficients(double m0, double m, const Constants& constants);

// Sum_i [ |p_i|^2/(2 mu_i) - beta_i mu_i/|r_i| ] + p1.p2/m0 - G m1 m2/|r1-r2|.
// Throws std::domain_error on zero separation.
double h_newton(const PhaseState& state, const SystemConfig& config);

// (1/c^2) Sum_i [ -(g1/mu^3)(P.P)^2 - (g2/mu)(P.P)/r - (g3/mu)(r.P)^2/r^3
//                 + g4 mu/r^2 ],  P_i = p_i + (mu_i/m0) p_{3-i}.
// The 1/c^2 factor is applied once at the end, so scaling c -> 2c divides the
// value by exactly 4 in floating point.
double h_pn(const PhaseState& state, const SystemConfig& config);

// h_newton plus h_pn when config.model is relativistic.
double h_total(const PhaseState& state, const SystemConfig& config);

struct Gradients {
  std::array<Vec2, 2> dH_dr;
  std::array<Vec2, 2> dH_dp;
};

// Exact analytic partials of h_total with respect to every component.
Gradients gradients(const PhaseState& state, const SystemConfig& config);

}  // namespace secres

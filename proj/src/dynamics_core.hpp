#pragma once

// Shared flat-array core of the equations of motion. Both the public
// gradients() and the integrator's stepping loop call into this, so the
// finite-difference-tested derivatives and the integrated ones are the same
// code. State layout: r1x r1y r2x r2y p1x p1y p2x p2y.

#include <cmath>
#include <stdexcept>

#include "secres/hamiltonian.hpp"

namespace secres::detail {

struct DynCore {
  double m0 = 1.0;
  double m1 = 0.0, m2 = 0.0;
  double mu1 = 0.0, mu2 = 0.0;
  double beta1 = 0.0, beta2 = 0.0;
  double G = kG;
  double inv_c2 = 0.0;
  bool rel = false;
  PnCoefficients c1, c2;

  explicit DynCore(const SystemConfig& cfg) {
    m0 = cfg.m0;
    m1 = cfg.planets[0].m;
    m2 = cfg.planets[1].m;
    G = cfg.constants.G;
    mu1 = m0 * m1 / (m0 + m1);
    mu2 = m0 * m2 / (m0 + m2);
    beta1 = G * (m0 + m1);
    beta2 = G * (m0 + m2);
    rel = cfg.model == Model::kRelativistic;
    inv_c2 = 1.0 / (cfg.constants.c * cfg.constants.c);
    c1 = pn_coefficients(m0, m1, cfg.constants);
    c2 = pn_coefficients(m0, m2, cfg.constants);
  }

  double energy(const double* y) const {
    double h = newton_energy(y);
    if (rel) h += pn_energy(y);
    return h;
  }

  double newton_energy(const double* y) const {
    double r1 = std::sqrt(y[0] * y[0] + y[1] * y[1]);
    double r2 = std::sqrt(y[2] * y[2] + y[3] * y[3]);
    double dx = y[0] - y[2], dy = y[1] - y[3];
    double d = std::sqrt(dx * dx + dy * dy);
    if (r1 == 0.0 || r2 == 0.0 || d == 0.0)
      throw std::domain_error("hamiltonian: zero separation");
    return (y[4] * y[4] + y[5] * y[5]) / (2.0 * mu1) - beta1 * mu1 / r1 +
           (y[6] * y[6] + y[7] * y[7]) / (2.0 * mu2) - beta2 * mu2 / r2 +
           (y[4] * y[6] + y[5] * y[7]) / m0 - G * m1 * m2 / d;
  }

  double pn_energy(const double* y) const {
    double r1 = std::sqrt(y[0] * y[0] + y[1] * y[1]);
    double r2 = std::sqrt(y[2] * y[2] + y[3] * y[3]);
    if (r1 == 0.0 || r2 == 0.0)
      throw std::domain_error("hamiltonian: zero separation");
    double P1x = y[4] + (mu1 / m0) * y[6], P1y = y[5] + (mu1 / m0) * y[7];
    double P2x = y[6] + (mu2 / m0) * y[4], P2y = y[7] + (mu2 / m0) * y[5];
    double s1 = P1x * P1x + P1y * P1y, q1 = y[0] * P1x + y[1] * P1y;
    double s2 = P2x * P2x + P2y * P2y, q2 = y[2] * P2x + y[3] * P2y;
    double t1 = -c1.gamma1 / (mu1 * mu1 * mu1) * s1 * s1 -
                c1.gamma2 / mu1 * s1 / r1 -
                c1.gamma3 / mu1 * q1 * q1 / (r1 * r1 * r1) +
                c1.gamma4 * mu1 / (r1 * r1);
    double t2 = -c2.gamma1 / (mu2 * mu2 * mu2) * s2 * s2 -
                c2.gamma2 / mu2 * s2 / r2 -
                c2.gamma3 / mu2 * q2 * q2 / (r2 * r2 * r2) +
                c2.gamma4 * mu2 / (r2 * r2);
    // single multiply by 1/c^2 keeps the c-scaling of the value exact
    return inv_c2 * (t1 + t2);
  }

  // dHdr, dHdp each hold x1 y1 x2 y2.
  void grads(const double* y, double* dHdr, double* dHdp) const {
    double r1sq = y[0] * y[0] + y[1] * y[1], r1 = std::sqrt(r1sq);
    double r2sq = y[2] * y[2] + y[3] * y[3], r2 = std::sqrt(r2sq);
    double dx = y[0] - y[2], dy = y[1] - y[3];
    double dsq = dx * dx + dy * dy, d = std::sqrt(dsq);
    if (r1 == 0.0 || r2 == 0.0 || d == 0.0)
      throw std::domain_error("hamiltonian: zero separation");
    double r1c = r1sq * r1, r2c = r2sq * r2, dc = dsq * d;

    dHdp[0] = y[4] / mu1 + y[6] / m0;
    dHdp[1] = y[5] / mu1 + y[7] / m0;
    dHdp[2] = y[6] / mu2 + y[4] / m0;
    dHdp[3] = y[7] / mu2 + y[5] / m0;

    double k12 = G * m1 * m2 / dc;
    dHdr[0] = beta1 * mu1 * y[0] / r1c + k12 * dx;
    dHdr[1] = beta1 * mu1 * y[1] / r1c + k12 * dy;
    dHdr[2] = beta2 * mu2 * y[2] / r2c - k12 * dx;
    dHdr[3] = beta2 * mu2 * y[3] / r2c - k12 * dy;

    if (!rel) return;

    double P1x = y[4] + (mu1 / m0) * y[6], P1y = y[5] + (mu1 / m0) * y[7];
    double P2x = y[6] + (mu2 / m0) * y[4], P2y = y[7] + (mu2 / m0) * y[5];
    double s1 = P1x * P1x + P1y * P1y, q1 = y[0] * P1x + y[1] * P1y;
    double s2 = P2x * P2x + P2y * P2y, q2 = y[2] * P2x + y[3] * P2y;
    double r1_5 = r1c * r1sq, r2_5 = r2c * r2sq;

    // dT_i/dP_i = a_i P_i + b_i r_i
    double a1 = -4.0 * c1.gamma1 / (mu1 * mu1 * mu1) * s1 - 2.0 * c1.gamma2 / (mu1 * r1);
    double b1 = -2.0 * c1.gamma3 / mu1 * q1 / r1c;
    double dT1dPx = a1 * P1x + b1 * y[0], dT1dPy = a1 * P1y + b1 * y[1];
    double a2 = -4.0 * c2.gamma1 / (mu2 * mu2 * mu2) * s2 - 2.0 * c2.gamma2 / (mu2 * r2);
    double b2 = -2.0 * c2.gamma3 / mu2 * q2 / r2c;
    double dT2dPx = a2 * P2x + b2 * y[2], dT2dPy = a2 * P2y + b2 * y[3];

    // dT_i/dr_i = e_i r_i + f_i P_i
    double e1 = c1.gamma2 / mu1 * s1 / r1c + 3.0 * c1.gamma3 / mu1 * q1 * q1 / r1_5 -
                2.0 * c1.gamma4 * mu1 / (r1sq * r1sq);
    double f1 = -2.0 * c1.gamma3 / mu1 * q1 / r1c;
    double e2 = c2.gamma2 / mu2 * s2 / r2c + 3.0 * c2.gamma3 / mu2 * q2 * q2 / r2_5 -
                2.0 * c2.gamma4 * mu2 / (r2sq * r2sq);
    double f2 = -2.0 * c2.gamma3 / mu2 * q2 / r2c;

    // chain rule through P_i: dP_i/dp_i = 1, dP_{3-i}/dp_i = mu_{3-i}/m0
    dHdp[0] += inv_c2 * (dT1dPx + (mu2 / m0) * dT2dPx);
    dHdp[1] += inv_c2 * (dT1dPy + (mu2 / m0) * dT2dPy);
    dHdp[2] += inv_c2 * ((mu1 / m0) * dT1dPx + dT2dPx);
    dHdp[3] += inv_c2 * ((mu1 / m0) * dT1dPy + dT2dPy);
    dHdr[0] += inv_c2 * (e1 * y[0] + f1 * P1x);
    dHdr[1] += inv_c2 * (e1 * y[1] + f1 * P1y);
    dHdr[2] += inv_c2 * (e2 * y[2] + f2 * P2x);
    dHdr[3] += inv_c2 * (e2 * y[3] + f2 * P2y);
  }

  void rhs(const double* y, double* dydt) const {
    double dHdr[4], dHdp[4];
    grads(y, dHdr, dHdp);
    dydt[0] = dHdp[0];
    dydt[1] = dHdp[1];
    dydt[2] = dHdp[2];
    dydt[3] = dHdp[3];
    dydt[4] = -dHdr[0];
    dydt[5] = -dHdr[1];
    dydt[6] = -dHdr[2];
    dydt[7] = -dHdr[3];
  }
};

inline void pack_state(const PhaseState& s, double* y) {
  y[0] = s.bodies[0].r.x;
  y[1] = s.bodies[0].r.y;
  y[2] = s.bodies[1].r.x;
  y[3] = s.bodies[1].r.y;
  y[4] = s.bodies[0].p.x;
  y[5] = s.bodies[0].p.y;
  y[6] = s.bodies[1].p.x;
  y[7] = s.bodies[1].p.y;
}

inline PhaseState unpack_state(const double* y, double t) {
  PhaseState s;
  s.bodies[0].r = {y[0], y[1]};
  s.bodies[1].r = {y[2], y[3]};
  s.bodies[0].p = {y[4], y[5]};
  s.bodies[1].p = {y[6], y[7]};
  s.t = t;
  return s;
}

}  // namespace secres::detail

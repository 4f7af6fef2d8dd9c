#include "secres/hamiltonian.hpp"

#include "dynamics_core.hpp"

namespace secres {

PnCoefficients pn_coefficients(double m0, double m, const Constants& constants) {
  PnCoefficients c;
  double mt = m0 + m;
  c.mu = m0 * m / mt;
  c.beta = constants.G * mt;
  c.upsilon = m0 * m / (mt * mt);
  c.gamma1 = (1.0 - 3.0 * c.upsilon) / 8.0;
  c.gamma2 = c.beta * (3.0 + c.upsilon) / 2.0;
  c.gamma3 = c.beta * c.upsilon / 2.0;
  c.gamma4 = c.beta * c.beta / 2.0;
  return c;
}

double h_newton(const PhaseState& state, const SystemConfig& config) {
  detail::DynCore core(config);
  double y[8];
  detail::pack_state(state, y);
  return core.newton_energy(y);
}

double h_pn(const PhaseState& state, const SystemConfig& config) {
  detail::DynCore core(config);
  double y[8];
  detail::pack_state(state, y);
  return core.pn_energy(y);
}

double h_total(const PhaseState& state, const SystemConfig& config) {
  detail::DynCore core(config);
  double y[8];
  detail::pack_state(state, y);
  return core.energy(y);
}

Gradients gradients(const PhaseState& state, const SystemConfig& config) {
  detail::DynCore core(config);
  double y[8], dHdr[4], dHdp[4];
  detail::pack_state(state, y);
  core.grads(y, dHdr, dHdp);
  Gradients g;
  g.dH_dr[0] = {dHdr[0], dHdr[1]};
  g.dH_dr[1] = {dHdr[2], dHdr[3]};
  g.dH_dp[0] = {dHdp[0], dHdp[1]};
  g.dH_dp[1] = {dHdp[2], dHdp[3]};
  return g;
}

}  // namespace secres

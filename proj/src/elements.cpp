#include "secres/elements.hpp"

#include <cmath>

namespace secres {

double reduce_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  // fmod of a tiny negative can round back up to 2pi
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double kepler_solve(double M, double e) {
  if (!(e >= 0.0 && e < 1.0)) {
    throw std::domain_error("kepler_solve: eccentricity " + std::to_string(e) +
                            " outside [0, 1)");
  }
  if (!std::isfinite(M)) throw std::domain_error("kepler_solve: M not finite");
  if (e == 0.0) return M;

  // Work in [0, 2pi), restore the branch offset at the end so E is
  // continuous in M across full turns.
  double turns = std::floor(M / kTwoPi);
  double Mr = M - kTwoPi * turns;

  double s = std::sin(Mr);
  double E = Mr + 0.85 * e * ((s > 0) - (s < 0));
  constexpr double kTol = 1e-13;
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    double f = E - e * std::sin(E) - Mr;
    if (std::fabs(f) <= kTol) {
      converged = true;
      break;
    }
    double fp = 1.0 - e * std::cos(E);
    double step = f / fp;
    // damp: never move more than half a radian at once
    if (std::fabs(step) > 0.5) step = std::copysign(0.5, step);
    E -= step;
  }
  if (!converged && std::fabs(E - e * std::sin(E) - Mr) > kTol) {
    // bisection fallback; f is monotone increasing in E
    double lo = 0.0, hi = kTwoPi;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      double f = mid - e * std::sin(mid) - Mr;
      if (f <= 0)
        lo = mid;
      else
        hi = mid;
    }
    E = 0.5 * (lo + hi);
    // polish once; the interval is already ~1e-16 wide
    E -= (E - e * std::sin(E) - Mr) / (1.0 - e * std::cos(E));
  }
  return E + kTwoPi * turns;
}

BodyState elements_to_state(const OrbitalElements& el, double m0, double m,
                            const Constants& constants) {
  if (!(el.a > 0.0)) throw std::domain_error("elements_to_state: a <= 0");
  if (!(el.e >= 0.0 && el.e < 1.0))
    throw std::domain_error("elements_to_state: e outside [0, 1)");

  double beta = constants.G * (m0 + m);
  double mu = m0 * m / (m0 + m);
  double n = std::sqrt(beta / (el.a * el.a * el.a));
  double E = kepler_solve(el.M, el.e);
  double cE = std::cos(E), sE = std::sin(E);
  double se = std::sqrt(1.0 - el.e * el.e);

  // perifocal frame, perihelion on +x
  double xo = el.a * (cE - el.e);
  double yo = el.a * se * sE;
  double Edot = n / (1.0 - el.e * cE);
  double vxo = -el.a * sE * Edot;
  double vyo = el.a * se * cE * Edot;

  double cw = std::cos(el.varpi), sw = std::sin(el.varpi);
  BodyState s;
  s.r = {cw * xo - sw * yo, sw * xo + cw * yo};
  s.p = {mu * (cw * vxo - sw * vyo), mu * (sw * vxo + cw * vyo)};
  return s;
}

OrbitalElements state_to_elements(const BodyState& s, double m0, double m,
                                  const Constants& constants) {
  double beta = constants.G * (m0 + m);
  double mu = m0 * m / (m0 + m);
  double r = norm(s.r);
  if (!(r > 0.0)) throw std::domain_error("state_to_elements: |r| = 0");
  Vec2 v = (1.0 / mu) * s.p;
  double v2 = dot(v, v);

  double energy = 0.5 * v2 - beta / r;
  if (energy >= 0.0) {
    throw UnboundOrbit("state_to_elements: two-body energy " +
                       std::to_string(energy) + " >= 0 (orbit unbound)");
  }
  double a = -beta / (2.0 * energy);
  double hz = cross(s.r, v);

  // planar Laplace-Runge-Lenz vector fixes e and varpi
  Vec2 ev = {(v.y * hz) / beta - s.r.x / r, (-v.x * hz) / beta - s.r.y / r};
  double e = norm(ev);

  OrbitalElements el;
  el.a = a;
  el.e = e;
  double cos_f, sin_f;  // true anomaly from perihelion
  if (e > 1e-14) {
    el.varpi = reduce_angle(std::atan2(ev.y, ev.x));
    cos_f = dot(ev, s.r) / (e * r);
    sin_f = cross(ev, s.r) / (e * r);
  } else {
    // circular: perihelion direction undefined, use +x
    el.varpi = 0.0;
    cos_f = s.r.x / r;
    sin_f = s.r.y / r;
  }
  // eccentric anomaly from the true anomaly, then Kepler back to M
  double se = std::sqrt(std::max(0.0, 1.0 - e * e));
  double E = std::atan2(se * sin_f, e + cos_f);
  el.M = reduce_angle(E - e * std::sin(E));
  return el;
}

PoincareSecular secular_coordinates(const SystemConfig& config) {
  PoincareSecular out;
  for (int i = 0; i < 2; ++i) {
    const Planet& pl = config.planets[i];
    const OrbitalElements& el = pl.elements;
    double beta = config.constants.G * (config.m0 + pl.m);
    double mu = config.m0 * pl.m / (config.m0 + pl.m);
    double Lambda = mu * std::sqrt(beta * el.a);
    // 1 - sqrt(1-e^2) without cancellation at small e
    double se = std::sqrt(1.0 - el.e * el.e);
    double phi = el.e * el.e / (1.0 + se);
    double rho = std::sqrt(2.0 * Lambda * phi);
    out.Lambda[i] = Lambda;
    out.xi[i] = rho * std::cos(el.varpi);
    out.eta[i] = -rho * std::sin(el.varpi);
  }
  return out;
}

}  // namespace secres

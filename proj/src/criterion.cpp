#include "secres/criterion.hpp"

#include <stdexcept>

namespace secres {

PiReport pi_indicator(const SystemConfig& config, double threshold) {
  double a1 = config.planets[0].elements.a;
  double a2 = config.planets[1].elements.a;
  if (!(a1 < a2))
    throw std::domain_error("pi_indicator: planets must be ordered a1 < a2");
  if (!(threshold > 0.0))
    throw std::domain_error("pi_indicator: threshold must be positive");

  PiReport rep;
  rep.threshold = threshold;
  double c2 = config.constants.c * config.constants.c;
  for (int i = 0; i < 2; ++i) {
    double ai = config.planets[i].elements.a;
    double m_other = config.planets[1 - i].m;
    rep.pi[i] = 4.0 * config.constants.G * a2 * a2 * a2 * config.m0 *
                (config.m0 + config.planets[i].m) /
                (c2 * ai * ai * a1 * a1 * m_other);
    rep.relevant[i] = rep.pi[i] >= threshold;
  }
  return rep;
}

}  // namespace secres

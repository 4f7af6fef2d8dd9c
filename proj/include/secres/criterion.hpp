#pragma once

#include <array>

#include "secres/elements.hpp"

namespace secres {

struct PiReport {
  std::array<double, 2> pi{};
  std::array<bool, 2> relevant{};
  double threshold = 0.1;
};

// Pi_i = 4 G a2^3 m0 (m0 + m_i) / (c^2 a_i^2 a1^2 m_{3-i}), flagged against
// the threshold. Throws std::domain_error when a1 >= a2.
PiReport pi_indicator(const SystemConfig& config, double threshold = 0.1);

}  // namespace secres

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "secres/hamiltonian.hpp"

namespace secres {

struct IntegrationSettings {
  double t_end = 0.0;    // yr, > 0
  double dt_out = 0.0;   // output grid spacing, yr, > 0
  double rel_tol = 1e-12;  // local relative tolerance, (0, 1e-6]
  double abs_tol = 0.0;    // 0 selects rel_tol * 1e-2
  std::int64_t max_steps = 2'000'000'000;  // attempted steps
};

enum class IntegrationStatus {
  kOk,
  kSingularity,           // |r_i| or |r1 - r2| fell below 1e-6 AU
  kStepBudgetExhausted,
};

struct CartesianTrajectory {
  std::vector<double> times;  // exact multiples of dt_out, starting at 0
  std::vector<PhaseState> states;
  std::vector<double> energy_rel_err;  // |H(t) - H(0)| / |H(0)| per sample
  SystemConfig config_used;
  IntegrationStatus status = IntegrationStatus::kOk;
  std::int64_t steps_taken = 0;
  std::int64_t steps_rejected = 0;
};

// Adaptive embedded Runge-Kutta-Fehlberg 7(8). Samples are captured by
// landing steps exactly on the output grid. On singularity approach or step
// budget exhaustion the partial trajectory is returned with the status flag
// set. Deterministic given identical inputs. Throws std::invalid_argument on
// settings outside the documented ranges.
CartesianTrajectory integrate(const SystemConfig& config,
                              const IntegrationSettings& settings);

// Osculating elements of every sample, per planet.
struct ElementsSeries {
  std::array<std::vector<OrbitalElements>, 2> planets;
};

// Elementwise state_to_elements over the trajectory. Unbound samples raise
// UnboundOrbit carrying the first offending sample index. The default entry
// point runs the conversion across threads; the serial variant is the
// reference implementation (identical output, kept for tests and benchmarks).
ElementsSeries osculating_series(const CartesianTrajectory& traj);
ElementsSeries osculating_series_serial(const CartesianTrajectory& traj);

}  // namespace secres

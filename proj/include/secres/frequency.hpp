#pragma once

#include <array>
#include <vector>

#include "secres/criterion.hpp"
#include "secres/integrator.hpp"

namespace secres {

struct FrequencyFit {
  double value = 0.0;      // rad/yr
  double std_error = 0.0;  // standard error of the fitted slope
};

// Least-squares slope of the unwrapped longitude of perihelion. Requires at
// least 16 samples and min e > 1e-4 (otherwise varpi is ill-defined; the
// error message points to dominant_frequency). Unwrapping flips branches on
// jumps larger than pi, so sampling must resolve the precession.
FrequencyFit apsidal_frequency(const std::vector<OrbitalElements>& series,
                               const std::vector<double>& times);

// Peak frequency of the complex signal k + i h on a uniform grid of at least
// 64 samples: Hann window, full-range discrete Fourier scan, quadratic peak
// interpolation, then local refinement of the windowed transform. Throws
// std::runtime_error when no peak clears 5x the median magnitude.
double dominant_frequency(const std::vector<double>& h,
                          const std::vector<double>& k,
                          const std::vector<double>& times);

namespace detail {
// Windowed DFT magnitudes over bins [-N/2, N/2); parallel and serial
// reference versions produce identical output.
std::vector<double> dft_magnitudes(const std::vector<double>& re,
                                   const std::vector<double>& im);
std::vector<double> dft_magnitudes_serial(const std::vector<double>& re,
                                          const std::vector<double>& im);
}  // namespace detail

struct PlanetFrequencies {
  double g_numeric_newton = 0.0;
  double g_numeric_rel = 0.0;
  double g_analytic_newton = 0.0;
  double g_analytic_rel = 0.0;
  double rel_shift = 0.0;  // (g_numeric_rel - g_numeric_newton) / g_numeric_newton
};

struct PrecessionReport {
  std::array<PlanetFrequencies, 2> planets;
  PiReport pi;
};

// Runs both models through integrate + frequency extraction and both
// analytic models through the secular pipeline. The two integrations run
// concurrently. Extraction failures are rethrown with planet/model context.
PrecessionReport compare(const SystemConfig& config,
                         const IntegrationSettings& settings,
                         double pi_threshold = 0.1);

// The same report from precomputed per-model runs, for callers that also
// need the series themselves. Estimator choice per planet and model: the
// spectral peak when the span covers at least 3 precession cycles of the
// analytic pre-estimate on 64+ samples or when e dips below 1e-4, the
// least-squares slope otherwise.
PrecessionReport compare_series(const SystemConfig& config,
                                const std::vector<double>& newton_times,
                                const ElementsSeries& newton_series,
                                const std::vector<double>& rel_times,
                                const ElementsSeries& rel_series,
                                double pi_threshold = 0.1);

}  // namespace secres

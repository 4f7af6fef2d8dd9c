// Timing harness for the two parallel kernels against their serial
// reference implementations. Output is a plain table; wall time only.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <vector>

#include "secres/frequency.hpp"
#include "secres/integrator.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

secres::CartesianTrajectory synthetic_trajectory(int n) {
  secres::SystemConfig cfg;
  cfg.m0 = 1.0;
  cfg.planets[0].m = 1e-3;
  cfg.planets[0].elements = {1.0, 0.05, 0.3, 0.0};
  cfg.planets[1].m = 1e-3;
  cfg.planets[1].elements = {1.8, 0.05, 1.9, 0.0};

  secres::CartesianTrajectory traj;
  traj.config_used = cfg;
  traj.times.resize(n);
  traj.states.resize(n);
  traj.energy_rel_err.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double t = 0.37 * i;
    traj.times[i] = t;
    secres::PhaseState s;
    for (int p = 0; p < 2; ++p) {
      secres::OrbitalElements el = cfg.planets[p].elements;
      double beta = cfg.constants.G * (cfg.m0 + cfg.planets[p].m);
      double mean_motion = std::sqrt(beta / (el.a * el.a * el.a));
      el.M = secres::reduce_angle(el.M + mean_motion * t);
      s.bodies[p] = secres::elements_to_state(el, cfg.m0, cfg.planets[p].m,
                                              cfg.constants);
    }
    s.t = t;
    traj.states[i] = s;
  }
  return traj;
}

}  // namespace

int main(int argc, char** argv) {
  int n_conv = argc > 1 ? std::atoi(argv[1]) : 20000;
  int n_dft = argc > 2 ? std::atoi(argv[2]) : 3072;
  int reps = argc > 3 ? std::atoi(argv[3]) : 5;
  if (n_conv < 2 || n_dft < 2 || reps < 1) {
    std::fprintf(stderr, "usage: bench_kernels [n_conv] [n_dft] [reps]\n");
    return 2;
  }

  std::printf("kernel                     n        serial      parallel   speedup\n");

  {
    secres::CartesianTrajectory traj = synthetic_trajectory(n_conv);
    // warm up both paths and check agreement once
    auto ref = secres::osculating_series_serial(traj);
    auto par = secres::osculating_series(traj);
    for (int p = 0; p < 2; ++p)
      for (size_t i = 0; i < ref.planets[p].size(); ++i)
        if (ref.planets[p][i].e != par.planets[p][i].e) {
          std::fprintf(stderr, "osculating kernels disagree at sample %zu\n", i);
          return 1;
        }
    double best_s = 1e300, best_p = 1e300;
    for (int r = 0; r < reps; ++r) {
      auto t0 = Clock::now();
      auto a = secres::osculating_series_serial(traj);
      (void)a;
      best_s = std::min(best_s, seconds_since(t0));
      t0 = Clock::now();
      auto b = secres::osculating_series(traj);
      (void)b;
      best_p = std::min(best_p, seconds_since(t0));
    }
    std::printf("osculating_series   %8d  %9.2f ms  %9.2f ms  %6.2fx\n", n_conv,
                best_s * 1e3, best_p * 1e3, best_s / best_p);
  }

  {
    std::vector<double> re(n_dft), im(n_dft);
    for (int i = 0; i < n_dft; ++i) {
      re[i] = 0.3 * std::cos(0.01 * i) + 0.1 * std::cos(0.002 * i + 0.5);
      im[i] = 0.3 * std::sin(0.01 * i) + 0.1 * std::sin(0.002 * i + 0.5);
    }
    auto ref = secres::detail::dft_magnitudes_serial(re, im);
    auto par = secres::detail::dft_magnitudes(re, im);
    for (size_t i = 0; i < ref.size(); ++i)
      if (ref[i] != par[i]) {
        std::fprintf(stderr, "dft kernels disagree at bin %zu\n", i);
        return 1;
      }
    double best_s = 1e300, best_p = 1e300;
    for (int r = 0; r < reps; ++r) {
      auto t0 = Clock::now();
      auto a = secres::detail::dft_magnitudes_serial(re, im);
      (void)a;
      best_s = std::min(best_s, seconds_since(t0));
      t0 = Clock::now();
      auto b = secres::detail::dft_magnitudes(re, im);
      (void)b;
      best_p = std::min(best_p, seconds_since(t0));
    }
    std::printf("dft_magnitudes      %8d  %9.2f ms  %9.2f ms  %6.2fx\n", n_dft,
                best_s * 1e3, best_p * 1e3, best_s / best_p);
  }

  return 0;
}

#include "secres/integrator.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "dynamics_core.hpp"

namespace secres {
namespace {

using State = std::array<double, 8>;

// The controller runs tighter than the requested tolerance; the slack covers
// accumulation over ~1e7 orbits so the advertised tolerance bounds the
// observed drift (measured: drift ~ tol^1.3, factor 3e-3 leaves margin at
// the 1e-10 / 1e4 yr conservation target).
constexpr double kInternalScale = 3e-3;
constexpr double kMinSeparation = 1e-6;  // AU

struct OdeRhs {
  const detail::DynCore* core;
  void operator()(const State& y, State& dydt, double) const {
    core->rhs(y.data(), dydt.data());
  }
};

void validate(const SystemConfig& config, const IntegrationSettings& s) {
  auto bad = [](const std::string& what) {
    throw std::invalid_argument("integrate: " + what);
  };
  if (!(s.t_end > 0.0) || !std::isfinite(s.t_end)) bad("t_end must be positive and finite");
  if (!(s.dt_out > 0.0) || !std::isfinite(s.dt_out)) bad("dt_out must be positive and finite");
  if (s.dt_out > s.t_end * (1.0 + 1e-12)) bad("dt_out must not exceed t_end");
  if (!(s.rel_tol > 0.0) || s.rel_tol > 1e-6) bad("rel_tol must be in (0, 1e-6]");
  if (s.abs_tol < 0.0 || !std::isfinite(s.abs_tol)) bad("abs_tol must be non-negative");
  if (s.max_steps <= 0) bad("max_steps must be positive");
  if (!(config.m0 > 0.0)) bad("star mass must be positive");
  if (!(config.constants.G > 0.0)) bad("G must be positive");
  if (!(config.constants.c > 0.0)) bad("c must be positive");
  for (int i = 0; i < 2; ++i) {
    if (!(config.planets[i].m > 0.0)) bad("planet masses must be positive");
    if (!(config.planets[i].elements.a > 0.0)) bad("semi-major axes must be positive");
  }
}

bool separations_ok(const double* y) {
  double r1 = std::hypot(y[0], y[1]);
  double r2 = std::hypot(y[2], y[3]);
  double d = std::hypot(y[0] - y[2], y[1] - y[3]);
  // negated comparison also catches NaN states
  return (r1 > kMinSeparation) && (r2 > kMinSeparation) && (d > kMinSeparation);
}

}  // namespace

CartesianTrajectory integrate(const SystemConfig& config,
                              const IntegrationSettings& settings) {
  validate(config, settings);

  detail::DynCore core(config);
  State y;
  for (int i = 0; i < 2; ++i) {
    BodyState b = elements_to_state(config.planets[i].elements, config.m0,
                                    config.planets[i].m, config.constants);
    y[4 * 0 + 2 * i] = b.r.x;
    y[4 * 0 + 2 * i + 1] = b.r.y;
    y[4 * 1 + 2 * i] = b.p.x;
    y[4 * 1 + 2 * i + 1] = b.p.y;
  }

  CartesianTrajectory traj;
  traj.config_used = config;

  double q = settings.t_end / settings.dt_out;
  auto n_out = static_cast<std::int64_t>(std::floor(q * (1.0 + 4e-16) + 1e-12));
  traj.times.reserve(n_out + 1);
  traj.states.reserve(n_out + 1);
  traj.energy_rel_err.reserve(n_out + 1);

  double e0 = core.energy(y.data());
  traj.times.push_back(0.0);
  traj.states.push_back(detail::unpack_state(y.data(), 0.0));
  traj.energy_rel_err.push_back(0.0);

  double abs_tol = settings.abs_tol > 0.0 ? settings.abs_tol : settings.rel_tol * 1e-2;
  auto stepper = boost::numeric::odeint::make_controlled(
      abs_tol * kInternalScale, settings.rel_tol * kInternalScale,
      boost::numeric::odeint::runge_kutta_fehlberg78<State>());
  OdeRhs rhs{&core};

  double n_fast = std::max(
      std::sqrt(core.beta1 / std::pow(config.planets[0].elements.a, 3)),
      std::sqrt(core.beta2 / std::pow(config.planets[1].elements.a, 3)));
  double h = std::min(settings.dt_out, kTwoPi / n_fast / 50.0);

  double t = 0.0;
  std::int64_t attempts = 0;
  for (std::int64_t k = 1; k <= n_out; ++k) {
    double t_target = static_cast<double>(k) * settings.dt_out;
    double tiny = 8.0 * std::numeric_limits<double>::epsilon() * t_target;
    while (t_target - t > tiny) {
      if (attempts >= settings.max_steps) {
        traj.status = IntegrationStatus::kStepBudgetExhausted;
        traj.steps_rejected = attempts - traj.steps_taken;
        return traj;
      }
      bool clamped = false;
      double h_prop = h;
      if (t + h > t_target) {
        h = t_target - t;
        clamped = true;
      }
      ++attempts;
      boost::numeric::odeint::controlled_step_result res;
      try {
        res = stepper.try_step(rhs, y, t, h);
      } catch (const std::domain_error&) {
        traj.status = IntegrationStatus::kSingularity;
        traj.steps_rejected = attempts - traj.steps_taken;
        return traj;
      }
      if (res == boost::numeric::odeint::success) {
        ++traj.steps_taken;
        if (clamped) h = std::max(h, h_prop);
        if (!separations_ok(y.data())) {
          traj.status = IntegrationStatus::kSingularity;
          traj.steps_rejected = attempts - traj.steps_taken;
          return traj;
        }
      } else if (h < 8.0 * std::numeric_limits<double>::epsilon() *
                         std::max(t, settings.dt_out)) {
        // step size fell below the time resolution: the controller cannot
        // advance, which in this dynamics means a singular approach
        traj.status = IntegrationStatus::kSingularity;
        traj.steps_rejected = attempts - traj.steps_taken;
        return traj;
      }
    }
    traj.times.push_back(t_target);
    traj.states.push_back(detail::unpack_state(y.data(), t_target));
    double e = core.energy(y.data());
    traj.energy_rel_err.push_back(std::abs(e - e0) / std::abs(e0));
  }
  traj.steps_rejected = attempts - traj.steps_taken;
  return traj;
}

namespace {

ElementsSeries osculating_impl(const CartesianTrajectory& traj, bool parallel) {
  const auto& cfg = traj.config_used;
  auto n = static_cast<std::int64_t>(traj.states.size());
  ElementsSeries series;
  series.planets[0].resize(n);
  series.planets[1].resize(n);

  long long first_bad = LLONG_MAX;
#pragma omp parallel for schedule(static) reduction(min : first_bad) \
    if (parallel)
  for (std::int64_t k = 0; k < n; ++k) {
    try {
      for (int i = 0; i < 2; ++i) {
        series.planets[i][k] =
            state_to_elements(traj.states[k].bodies[i], cfg.m0,
                              cfg.planets[i].m, cfg.constants);
      }
    } catch (...) {
      first_bad = std::min(first_bad, static_cast<long long>(k));
    }
  }
  if (first_bad != LLONG_MAX) {
    // redo the offending sample serially to recover the exception type
    auto k = static_cast<std::int64_t>(first_bad);
    for (int i = 0; i < 2; ++i) {
      try {
        (void)state_to_elements(traj.states[k].bodies[i], cfg.m0,
                                cfg.planets[i].m, cfg.constants);
      } catch (const UnboundOrbit& ex) {
        throw UnboundOrbit("sample " + std::to_string(k) + " planet " +
                           std::to_string(i + 1) + ": " + ex.what());
      }
    }
    throw std::runtime_error("osculating_series: conversion failed at sample " +
                             std::to_string(k));
  }
  return series;
}

}  // namespace

ElementsSeries osculating_series(const CartesianTrajectory& traj) {
  return osculating_impl(traj, true);
}

ElementsSeries osculating_series_serial(const CartesianTrajectory& traj) {
  return osculating_impl(traj, false);
}

}  // namespace secres

#include "secres/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <stdexcept>
#include <string>

#include "secres/secular.hpp"

namespace secres {

FrequencyFit apsidal_frequency(const std::vector<OrbitalElements>& series,
                               const std::vector<double>& times) {
  size_t n = series.size();
  if (n != times.size())
    throw std::invalid_argument("apsidal_frequency: series/times length mismatch");
  if (n < 16)
    throw std::invalid_argument("apsidal_frequency: need at least 16 samples");
  for (const auto& el : series) {
    if (el.e <= 1e-4)
      throw std::invalid_argument(
          "apsidal_frequency: eccentricity <= 1e-4, longitude of perihelion "
          "ill-defined; use dominant_frequency on (h, k) instead");
  }

  std::vector<double> w(n);
  w[0] = series[0].varpi;
  for (size_t i = 1; i < n; ++i) {
    double d = series[i].varpi - series[i - 1].varpi;
    d -= kTwoPi * std::round(d / kTwoPi);
    w[i] = w[i - 1] + d;
  }

  double tbar = 0.0, wbar = 0.0;
  for (size_t i = 0; i < n; ++i) {
    tbar += times[i];
    wbar += w[i];
  }
  tbar /= static_cast<double>(n);
  wbar /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (times[i] - tbar) * (times[i] - tbar);
    sxy += (times[i] - tbar) * (w[i] - wbar);
  }
  if (!(sxx > 0.0))
    throw std::invalid_argument("apsidal_frequency: degenerate time grid");
  FrequencyFit fit;
  fit.value = sxy / sxx;
  double rss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double r = w[i] - wbar - fit.value * (times[i] - tbar);
    rss += r * r;
  }
  fit.std_error = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
  return fit;
}

namespace detail {
namespace {

std::vector<double> dft_impl(const std::vector<double>& re,
                             const std::vector<double>& im, bool parallel) {
  auto n = static_cast<std::int64_t>(re.size());
  if (n != static_cast<std::int64_t>(im.size()))
    throw std::invalid_argument("dft_magnitudes: component length mismatch");
  if (n < 2) throw std::invalid_argument("dft_magnitudes: need at least 2 samples");

  std::vector<double> wr(n), wi(n);
  for (std::int64_t j = 0; j < n; ++j) {
    double w = 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(j) /
                                    static_cast<double>(n - 1));
    wr[j] = w * re[j];
    wi[j] = w * im[j];
  }

  std::vector<double> mags(n);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t u = 0; u < n; ++u) {
    std::int64_t m = u - n / 2;
    double sr = 0.0, si = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
      // exact integer phase reduction keeps the twiddle argument small
      std::int64_t q = (m * j) % n;
      if (q < 0) q += n;
      double ang = -kTwoPi * static_cast<double>(q) / static_cast<double>(n);
      double c = std::cos(ang), s = std::sin(ang);
      sr += wr[j] * c - wi[j] * s;
      si += wr[j] * s + wi[j] * c;
    }
    mags[u] = std::hypot(sr, si);
  }
  return mags;
}

}  // namespace

std::vector<double> dft_magnitudes(const std::vector<double>& re,
                                   const std::vector<double>& im) {
  return dft_impl(re, im, true);
}

std::vector<double> dft_magnitudes_serial(const std::vector<double>& re,
                                          const std::vector<double>& im) {
  return dft_impl(re, im, false);
}

}  // namespace detail

double dominant_frequency(const std::vector<double>& h,
                          const std::vector<double>& k,
                          const std::vector<double>& times) {
  size_t n = h.size();
  if (k.size() != n || times.size() != n)
    throw std::invalid_argument("dominant_frequency: component length mismatch");
  if (n < 64)
    throw std::invalid_argument("dominant_frequency: need at least 64 samples");
  double dt = (times.back() - times.front()) / static_cast<double>(n - 1);
  if (!(dt > 0.0))
    throw std::invalid_argument("dominant_frequency: times must increase");
  for (size_t j = 0; j < n; ++j) {
    double expect = times.front() + static_cast<double>(j) * dt;
    if (std::abs(times[j] - expect) > 1e-6 * dt)
      throw std::invalid_argument("dominant_frequency: uniform time grid required");
  }

  // signal is k + i h so a prograde line lands at positive frequency
  std::vector<double> mags = detail::dft_magnitudes(k, h);

  std::vector<double> sorted = mags;
  std::sort(sorted.begin(), sorted.end());
  double median = n % 2 == 1 ? sorted[n / 2]
                             : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  auto peak = std::max_element(mags.begin(), mags.end());
  auto u = static_cast<std::int64_t>(peak - mags.begin());
  if (!(*peak > 5.0 * median))
    throw std::runtime_error(
        "dominant_frequency: no spectral line clears 5x the median magnitude");

  double dw = kTwoPi / (static_cast<double>(n) * dt);
  double delta = 0.0;
  if (u > 0 && u + 1 < static_cast<std::int64_t>(n) && mags[u - 1] > 0.0 &&
      mags[u + 1] > 0.0) {
    double lm = std::log(mags[u - 1]);
    double l0 = std::log(mags[u]);
    double lp = std::log(mags[u + 1]);
    double denom = lm - 2.0 * l0 + lp;
    if (denom != 0.0) delta = std::clamp(0.5 * (lm - lp) / denom, -0.5, 0.5);
  }
  double w0 = (static_cast<double>(u - static_cast<std::int64_t>(n) / 2) + delta) * dw;

  // refine against the windowed transform of the raw samples
  std::vector<double> wr(n), wi(n);
  for (size_t j = 0; j < n; ++j) {
    double w = 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(j) /
                                    static_cast<double>(n - 1));
    wr[j] = w * k[j];
    wi[j] = w * h[j];
  }
  auto magnitude = [&](double omega) {
    double sr = 0.0, si = 0.0;
    for (size_t j = 0; j < n; ++j) {
      double ang = -omega * (times[j] - times.front());
      double c = std::cos(ang), s = std::sin(ang);
      sr += wr[j] * c - wi[j] * s;
      si += wr[j] * s + wi[j] * c;
    }
    return sr * sr + si * si;
  };
  double lo = w0 - 0.75 * dw, hi = w0 + 0.75 * dw;
  constexpr double kGolden = 0.61803398874989484;
  double c = hi - kGolden * (hi - lo);
  double d = lo + kGolden * (hi - lo);
  double fc = magnitude(c), fd = magnitude(d);
  for (int iter = 0; iter < 60; ++iter) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kGolden * (hi - lo);
      fc = magnitude(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kGolden * (hi - lo);
      fd = magnitude(d);
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

struct RunResult {
  std::vector<double> times;
  ElementsSeries series;
};

RunResult run_model(const SystemConfig& config, const IntegrationSettings& settings) {
  CartesianTrajectory traj = integrate(config, settings);
  if (traj.status != IntegrationStatus::kOk) {
    const char* why = traj.status == IntegrationStatus::kSingularity
                          ? "close encounter below the separation floor"
                          : "step budget exhausted";
    throw std::runtime_error(std::string("integration aborted: ") + why);
  }
  RunResult r;
  r.series = osculating_series(traj);
  r.times = std::move(traj.times);
  return r;
}

double extract_frequency(const std::vector<double>& times,
                         const std::vector<OrbitalElements>& series,
                         double g_expected) {
  size_t n = series.size();
  double e_min = series.front().e;
  for (const auto& el : series) e_min = std::min(e_min, el.e);
  double span = times.back() - times.front();
  double cycles = span * std::abs(g_expected) / kTwoPi;
  bool use_dft = e_min <= 1e-4 || (n >= 64 && cycles >= 3.0);
  if (use_dft) {
    std::vector<double> h(n), k(n);
    for (size_t j = 0; j < n; ++j) {
      h[j] = series[j].e * std::sin(series[j].varpi);
      k[j] = series[j].e * std::cos(series[j].varpi);
    }
    return dominant_frequency(h, k, times);
  }
  return apsidal_frequency(series, times).value;
}

}  // namespace

PrecessionReport compare_series(const SystemConfig& config,
                                const std::vector<double>& newton_times,
                                const ElementsSeries& newton_series,
                                const std::vector<double>& rel_times,
                                const ElementsSeries& rel_series,
                                double pi_threshold) {
  PrecessionReport report;
  report.pi = pi_indicator(config, pi_threshold);

  SecularSolution sol = secular_solution(config);
  for (int i = 0; i < 2; ++i) {
    PlanetFrequencies& pf = report.planets[i];
    auto dominant_mode = [&](const SecularModes& m) {
      double w0 = std::abs(m.modes[i][0] * m.amplitudes[0]);
      double w1 = std::abs(m.modes[i][1] * m.amplitudes[1]);
      return w0 >= w1 ? m.g[0] : m.g[1];
    };
    pf.g_analytic_newton = dominant_mode(sol.newtonian);
    pf.g_analytic_rel = dominant_mode(sol.relativistic);
    try {
      pf.g_numeric_newton = extract_frequency(newton_times, newton_series.planets[i],
                                              pf.g_analytic_newton);
    } catch (const std::exception& ex) {
      throw std::runtime_error("compare: planet " + std::to_string(i + 1) +
                               " newtonian: " + ex.what());
    }
    try {
      pf.g_numeric_rel =
          extract_frequency(rel_times, rel_series.planets[i], pf.g_analytic_rel);
    } catch (const std::exception& ex) {
      throw std::runtime_error("compare: planet " + std::to_string(i + 1) +
                               " relativistic: " + ex.what());
    }
    pf.rel_shift = (pf.g_numeric_rel - pf.g_numeric_newton) / pf.g_numeric_newton;
  }
  return report;
}

PrecessionReport compare(const SystemConfig& config,
                         const IntegrationSettings& settings,
                         double pi_threshold) {
  SystemConfig newton_cfg = config;
  newton_cfg.model = Model::kNewtonian;
  SystemConfig rel_cfg = config;
  rel_cfg.model = Model::kRelativistic;

  auto rel_future = std::async(std::launch::async, run_model, rel_cfg, settings);
  RunResult newton_run;
  try {
    newton_run = run_model(newton_cfg, settings);
  } catch (const std::exception& ex) {
    rel_future.wait();
    throw std::runtime_error(std::string("compare: newtonian run: ") + ex.what());
  }
  RunResult rel_run;
  try {
    rel_run = rel_future.get();
  } catch (const std::exception& ex) {
    throw std::runtime_error(std::string("compare: relativistic run: ") + ex.what());
  }

  return compare_series(config, newton_run.times, newton_run.series,
                        rel_run.times, rel_run.series, pi_threshold);
}

}  // namespace secres

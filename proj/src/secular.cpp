#include "secres/secular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace secres {

double laplace_coefficient(double s, int j, double alpha) {
  if (!(alpha > 0.0) || alpha >= 1.0)
    throw std::domain_error("laplace_coefficient: alpha must be in (0, 1)");
  if (j < 0) throw std::domain_error("laplace_coefficient: j must be >= 0");
  auto f = [s, j, alpha](double t) {
    double d = 1.0 - 2.0 * alpha * std::cos(t) + alpha * alpha;
    return std::cos(j * t) * std::pow(d, -s);
  };
  double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, kPi, 15, 1e-14);
  return 2.0 / kPi * value;
}

LlMatrix ll_matrix(const SystemConfig& config) {
  double a1 = config.planets[0].elements.a;
  double a2 = config.planets[1].elements.a;
  if (!(a1 < a2))
    throw std::domain_error("ll_matrix: planets must be ordered a1 < a2");
  double alpha = a1 / a2;
  double b1 = laplace_coefficient(1.5, 1, alpha);
  double b2 = laplace_coefficient(1.5, 2, alpha);

  Mat2 raw{};
  std::array<double, 2> Lambda{};
  for (int i = 0; i < 2; ++i) {
    double m = config.planets[i].m;
    double m_other = config.planets[1 - i].m;
    double a = config.planets[i].elements.a;
    double beta = config.constants.G * (config.m0 + m);
    double mu = config.m0 * m / (config.m0 + m);
    double n = std::sqrt(beta / (a * a * a));
    double albar = (i == 0) ? alpha : 1.0;
    double lead = (n / 4.0) * (m_other / (config.m0 + m)) * alpha * albar;
    raw[i][i] = lead * b1;
    raw[i][1 - i] = -lead * b2;
    Lambda[i] = mu * std::sqrt(beta * a);
  }

  LlMatrix out;
  out.basis_scale = {std::sqrt(Lambda[0]), std::sqrt(Lambda[1])};
  // conjugate by diag(sqrt(Lambda)), then symmetrize; the residual asymmetry
  // is O(m/m0) and dropping it is part of the model
  Mat2 conj{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      conj[i][j] = raw[i][j] * out.basis_scale[i] / out.basis_scale[j];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.A[i][j] = 0.5 * (conj[i][j] + conj[j][i]);
  return out;
}

std::array<double, 2> gr_correction(const SystemConfig& config) {
  std::array<double, 2> delta{};
  double c2 = config.constants.c * config.constants.c;
  for (int i = 0; i < 2; ++i) {
    double beta = config.constants.G * (config.m0 + config.planets[i].m);
    double a = config.planets[i].elements.a;
    delta[i] = 3.0 * std::pow(beta, 1.5) / (c2 * std::pow(a, 2.5));
  }
  return delta;
}

SecularMatrices secular_matrices(const SystemConfig& config) {
  LlMatrix ll = ll_matrix(config);
  SecularMatrices m;
  m.A = ll.A;
  m.basis_scale = ll.basis_scale;
  auto delta = gr_correction(config);
  m.B = ll.A;
  m.B[0][0] += delta[0];
  m.B[1][1] += delta[1];
  return m;
}

SecularModes secular_modes(const Mat2& M, const EccentricityVector& initial) {
  double a = M[0][0];
  double d = M[1][1];
  double b = 0.5 * (M[0][1] + M[1][0]);

  double mean = 0.5 * (a + d);
  double r = std::hypot(0.5 * (a - d), b);
  SecularModes out;
  out.g = {mean + r, mean - r};
  out.degenerate = std::abs(out.g[0] - out.g[1]) < 1e-14;

  double theta = 0.5 * std::atan2(2.0 * b, a - d);
  double ct = std::cos(theta), st = std::sin(theta);
  // columns are eigenvectors of g[0], g[1]; largest component positive
  out.modes = {{{ct, -st}, {st, ct}}};
  for (int j = 0; j < 2; ++j) {
    int imax = std::abs(out.modes[0][j]) >= std::abs(out.modes[1][j]) ? 0 : 1;
    if (out.modes[imax][j] < 0.0) {
      out.modes[0][j] = -out.modes[0][j];
      out.modes[1][j] = -out.modes[1][j];
    }
  }

  for (int j = 0; j < 2; ++j) {
    std::complex<double> c(
        out.modes[0][j] * initial.k[0] + out.modes[1][j] * initial.k[1],
        out.modes[0][j] * initial.h[0] + out.modes[1][j] * initial.h[1]);
    out.amplitudes[j] = std::abs(c);
    out.phases[j] = out.amplitudes[j] > 0.0 ? reduce_angle(std::arg(c)) : 0.0;
  }
  return out;
}

EccentricityVector evolve(const SecularModes& modes, double t) {
  EccentricityVector v;
  for (int i = 0; i < 2; ++i) {
    std::complex<double> z = 0.0;
    for (int j = 0; j < 2; ++j) {
      double phase = modes.g[j] * t + modes.phases[j];
      z += modes.modes[i][j] * modes.amplitudes[j] *
           std::complex<double>(std::cos(phase), std::sin(phase));
    }
    v.k[i] = z.real();
    v.h[i] = z.imag();
  }
  return v;
}

Envelope envelope(const SecularModes& modes) {
  Envelope env;
  for (int i = 0; i < 2; ++i) {
    double u = std::abs(modes.modes[i][0] * modes.amplitudes[0]);
    double w = std::abs(modes.modes[i][1] * modes.amplitudes[1]);
    env.e_max[i] = u + w;
    env.e_min[i] = std::abs(u - w);
  }
  return env;
}

SecularSolution secular_solution(const SystemConfig& config) {
  SecularSolution sol;
  sol.matrices = secular_matrices(config);
  EccentricityVector scaled;
  for (int i = 0; i < 2; ++i) {
    double e = config.planets[i].elements.e;
    double varpi = config.planets[i].elements.varpi;
    scaled.h[i] = sol.matrices.basis_scale[i] * e * std::sin(varpi);
    scaled.k[i] = sol.matrices.basis_scale[i] * e * std::cos(varpi);
  }
  sol.newtonian = secular_modes(sol.matrices.A, scaled);
  sol.relativistic = secular_modes(sol.matrices.B, scaled);
  return sol;
}

EccentricityVector secular_eccentricities(const SecularSolution& sol,
                                          Model model, double t) {
  const SecularModes& m =
      model == Model::kRelativistic ? sol.relativistic : sol.newtonian;
  EccentricityVector v = evolve(m, t);
  for (int i = 0; i < 2; ++i) {
    v.h[i] /= sol.matrices.basis_scale[i];
    v.k[i] /= sol.matrices.basis_scale[i];
  }
  return v;
}

Envelope secular_envelope(const SecularSolution& sol, Model model) {
  const SecularModes& m =
      model == Model::kRelativistic ? sol.relativistic : sol.newtonian;
  Envelope env = envelope(m);
  for (int i = 0; i < 2; ++i) {
    env.e_min[i] /= sol.matrices.basis_scale[i];
    env.e_max[i] /= sol.matrices.basis_scale[i];
  }
  return env;
}

}  // namespace secres

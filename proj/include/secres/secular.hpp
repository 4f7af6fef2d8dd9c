#pragma once

#include <array>

#include "secres/elements.hpp"

namespace secres {

using Mat2 = std::array<std::array<double, 2>, 2>;

// Linear secular model in the frequency normalization: with
// z_i = (k_i + i h_i) scaled by basis_scale_i, dz/dt = i M z and the
// eigenvalues of M are the precession frequencies, positive = prograde.
struct SecularMatrices {
  Mat2 A{};  // Newtonian, symmetric
  Mat2 B{};  // relativistic-corrected, symmetric
  std::array<double, 2> basis_scale{};  // sqrt(Lambda_i)
};

struct EccentricityVector {
  std::array<double, 2> h{};  // e_i sin varpi_i
  std::array<double, 2> k{};  // e_i cos varpi_i
};

struct SecularModes {
  std::array<double, 2> g{};          // rad/yr, sorted descending
  Mat2 modes{};                       // orthonormal eigenvector columns
  std::array<double, 2> amplitudes{};  // E_j >= 0
  std::array<double, 2> phases{};      // beta_j in [0, 2pi)
  bool degenerate = false;             // |g1 - g2| < 1e-14
};

// b_s^(j)(alpha) = (1/pi) Int_0^{2pi} cos(j t) (1 - 2 alpha cos t + alpha^2)^{-s} dt
// via adaptive quadrature, absolute accuracy 1e-12. Throws std::domain_error
// for alpha outside (0, 1).
double laplace_coefficient(double s, int j, double alpha);

struct LlMatrix {
  Mat2 A{};
  std::array<double, 2> basis_scale{};
};

// Classical secular matrix for the (h, k) pair of each planet,
//   diag:     +(n_i/4) (m_{3-i}/(m0+m_i)) alpha albar_i b_{3/2}^(1)
//   off-diag: -(n_i/4) (m_{3-i}/(m0+m_i)) alpha albar_i b_{3/2}^(2)
// with albar = alpha for the inner planet and 1 for the outer, then
// conjugated by diag(basis_scale) and symmetrized (the residual asymmetry is
// O(m/m0)). Throws std::domain_error when a1 >= a2.
LlMatrix ll_matrix(const SystemConfig& config);

// Per-planet diagonal increment +3 beta_i^{3/2} / (c^2 a_i^{5/2}); adding it
// to A yields B. Positive because the induced precession is prograde.
std::array<double, 2> gr_correction(const SystemConfig& config);

SecularMatrices secular_matrices(const SystemConfig& config);

// Closed-form eigen decomposition of a symmetric 2x2 plus mode amplitudes
// and phases fitted so the mode sum reproduces `initial` at t = 0 exactly.
SecularModes secular_modes(const Mat2& M, const EccentricityVector& initial);

// (k_i + i h_i)(t) = Sum_j modes_ij E_j exp(i (g_j t + beta_j)).
EccentricityVector evolve(const SecularModes& modes, double t);

struct Envelope {
  std::array<double, 2> e_min{};
  std::array<double, 2> e_max{};
};

// e_max,i = |M_i1 E_1| + |M_i2 E_2|, e_min,i = ||M_i1 E_1| - |M_i2 E_2||.
Envelope envelope(const SecularModes& modes);

// Whole-pipeline wrapper in physical variables: scales the initial
// eccentricity vector by basis_scale, decomposes against A and B, and maps
// results back.
struct SecularSolution {
  SecularMatrices matrices;
  SecularModes newtonian;
  SecularModes relativistic;
};

SecularSolution secular_solution(const SystemConfig& config);

// Physical (h, k) at time t under the chosen model.
EccentricityVector secular_eccentricities(const SecularSolution& sol,
                                          Model model, double t);

// Physical per-planet eccentricity bounds under the chosen model.
Envelope secular_envelope(const SecularSolution& sol, Model model);

}  // namespace secres

#pragma once

// Random generators for property checks. Deterministic for a given engine seed.

#include <cmath>
#include <numbers>
#include <random>

#include "ptsig/hamiltonian.hpp"
#include "ptsig/states.hpp"

namespace ptsig::sampling {

template <typename Rng>
double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

template <typename Rng>
Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

/// Parameters in the unbroken phase with |alpha| <= max_alpha and t in [0.2, 1.5].
template <typename Rng>
PTParams pt_params(Rng& rng, double max_alpha = 1.4) {
  PTParams p;
  p.t = uniform(rng, 0.2, 1.5);
  const double a = uniform(rng, -max_alpha, max_alpha);
  p.s = p.t * std::sin(a);
  p.r = uniform(rng, -1.0, 1.0);
  p.xi = uniform(rng, -std::numbers::pi, std::numbers::pi);
  p.J = 1.0;
  return p;
}

/// Complex Gaussian matrix rescaled to Frobenius norm `norm`.
template <typename Rng>
Operator2 operator2(Rng& rng, double norm) {
  Operator2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = gaussian_complex(rng);
  return m * (norm / m.norm());
}

/// Random mixed state G G^dagger / tr, G a Dim x rank Gaussian matrix.
template <int Dim, typename Rng>
Density<Dim> density(Rng& rng) {
  const int rank = std::uniform_int_distribution<int>(1, Dim)(rng);
  Eigen::Matrix<Complex, Dim, Eigen::Dynamic> g(Dim, rank);
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = gaussian_complex(rng);
  Eigen::Matrix<Complex, Dim, Dim> m = g * g.adjoint();
  m /= std::real(m.trace());
  return Density<Dim>::from_matrix(m);
}

}  // namespace ptsig::sampling

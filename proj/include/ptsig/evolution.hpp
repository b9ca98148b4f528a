#pragma once

#include <array>

#include "ptsig/hamiltonian.hpp"

namespace ptsig {

/// A PT model together with the dimensionless evolution time tau = J tau' / hbar.
struct EvolutionSpec {
  PTParams params;
  double tau = 0.0;
};

/// Throws (BrokenPTPhase, DegenerateScale, AtBranchPoint, NonFinite) unless the
/// spec is in the unbroken phase away from the branch points. Returns alpha.
double validate(const EvolutionSpec& spec);

/// t1 = t * tau * cos(alpha).
double t1(const EvolutionSpec& spec);

/// exp(-i H tau); not unitary unless alpha = 0 or sin(t1) = 0.
Operator2 propagator(const EvolutionSpec& spec);

/// U^dagger U for U = propagator(spec).
Operator2 gram(const EvolutionSpec& spec);

/// 2 sec^2(alpha) sin^2(t1) + cos(2 t1), which also equals tr(U^dagger U) / 2.
double werner_normalizer(const EvolutionSpec& spec);

/// Closed-form diagonal of U^dagger U:
///   <0|U^dag U|0> = N - tan(a) sin(2 t1) sin(xi),
///   <1|U^dag U|1> = N + tan(a) sin(2 t1) sin(xi),
/// with N = werner_normalizer(spec).
std::array<double, 2> gram_diagonal_closed_form(const EvolutionSpec& spec);

}  // namespace ptsig

#pragma once

#include "ptsig/matrixkit.hpp"

namespace ptsig {

/// Parameters of the general two-level PT-symmetric Hamiltonian J * H(r, s, t, xi).
/// r, s, t are dimensionless, xi is an angle, J carries the energy unit.
struct PTParams {
  double r = 0.0;
  double s = 0.0;
  double t = 1.0;
  double xi = 0.0;
  double J = 1.0;
};

/// |cos(alpha)| below this is treated as the branch point alpha = +-pi/2.
inline constexpr double kBranchPointGuard = 1e-9;

/// alpha = arcsin(s / t) in [-pi/2, pi/2]; 0 when s = 0.
/// Throws DegenerateScale for t = 0, s != 0 and BrokenPTPhase for s^2 > t^2.
double alpha(const PTParams& params);

/// alpha(params), additionally throwing AtBranchPoint when |cos alpha| < kBranchPointGuard.
double alpha_away_from_branch_point(const PTParams& params);

/// The dimensionless H of the PT model (J is not multiplied in).
Operator2 build(const PTParams& params);

/// Parity [[cos phi, sin phi], [sin phi, -cos phi]].
Operator2 parity(double phi_tilde);

/// max |P conj(H) P - H|, i.e. how far H is from commuting with the PT action.
double check_pt_symmetry(const Operator2& h, double phi_tilde);

struct Spectrum {
  double e_plus = 0.0;
  double e_minus = 0.0;
  Ket2 v_plus;
  Ket2 v_minus;
  double alpha = 0.0;
};

/// Closed-form eigensystem of J * H. Eigenvectors are unit-normalized and not
/// orthogonal unless alpha = 0.
///
/// H = r + t R(xi) (sigma_z + i sin(alpha) sigma_x) R(xi)^T where R(xi) is the
/// real rotation by xi / 2, so the eigenvectors are R(xi) applied to
/// (1 + cos a, i sin a) and (-i sin a, 1 + cos a).
Spectrum spectrum(const PTParams& params);

/// <E+|E-> under the standard inner product. Equals -i sin(alpha).
Complex overlap_eigenstates(const Spectrum& spec);

}  // namespace ptsig

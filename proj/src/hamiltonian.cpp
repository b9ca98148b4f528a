#include "ptsig/hamiltonian.hpp"

#include <cmath>

namespace ptsig {

double alpha(const PTParams& params) {
  const double s = params.s, t = params.t;
  if (!std::isfinite(s) || !std::isfinite(t)) throw Error(ErrorKind::NonFinite, "alpha");
  if (s == 0.0) return 0.0;
  if (t == 0.0) throw Error(ErrorKind::DegenerateScale, "alpha");
  if (s * s > t * t) throw Error(ErrorKind::BrokenPTPhase, "s^2 > t^2");
  return std::asin(std::clamp(s / t, -1.0, 1.0));
}

double alpha_away_from_branch_point(const PTParams& params) {
  const double a = alpha(params);
  if (std::abs(std::cos(a)) < kBranchPointGuard) throw Error(ErrorKind::AtBranchPoint, "|cos alpha| < 1e-9");
  return a;
}

Operator2 build(const PTParams& params) {
  const double c = std::cos(params.xi), sn = std::sin(params.xi);
  const Complex i(0.0, 1.0);
  const Complex off = i * params.s * c + params.t * sn;
  Operator2 h;
  h << params.r + params.t * c - i * params.s * sn, off,
       off, params.r - params.t * c + i * params.s * sn;
  return h;
}

Operator2 parity(double phi_tilde) {
  const double c = std::cos(phi_tilde), sn = std::sin(phi_tilde);
  Operator2 p;
  p << c, sn, sn, -c;
  return p;
}

double check_pt_symmetry(const Operator2& h, double phi_tilde) {
  const Operator2 p = parity(phi_tilde);
  return max_abs((p * h.conjugate() * p - h).eval());
}

Spectrum spectrum(const PTParams& params) {
  const double a = alpha_away_from_branch_point(params);
  const double ca = std::cos(a), sa = std::sin(a);
  const double half = params.xi / 2.0;

  Eigen::Matrix2d rot;
  rot << std::cos(half), -std::sin(half), std::sin(half), std::cos(half);

  const Complex i(0.0, 1.0);
  Ket2 plus, minus;
  plus << 1.0 + ca, i * sa;
  minus << -i * sa, 1.0 + ca;

  Spectrum out;
  out.alpha = a;
  out.e_plus = params.J * (params.r + params.t * ca);
  out.e_minus = params.J * (params.r - params.t * ca);
  out.v_plus = rot.cast<Complex>() * plus;
  out.v_minus = rot.cast<Complex>() * minus;
  out.v_plus.normalize();
  out.v_minus.normalize();
  return out;
}

Complex overlap_eigenstates(const Spectrum& spec) {
  return spec.v_plus.dot(spec.v_minus);
}

}  // namespace ptsig

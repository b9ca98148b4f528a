#include "ptsig/cpt.hpp"

#include <cmath>

namespace ptsig {

Operator2 charge_conjugation(const PTParams& params) {
  const double a = alpha_away_from_branch_point(params);
  const double sa = std::sin(a), ca = std::cos(a);
  const double cx = std::cos(params.xi), sx = std::sin(params.xi);
  const Complex i(0.0, 1.0);
  const Complex off = i * cx * sa + sx;
  Operator2 c;
  c << cx - i * sa * sx, off,
       off, i * sa * sx - cx;
  return c / ca;
}

Operator2 charge_conjugation_spectral(const PTParams& params) {
  const Spectrum spec = spectrum(params);
  Operator2 right;
  right.col(0) = spec.v_plus;
  right.col(1) = spec.v_minus;
  // Rows of the inverse are the biorthogonal left vectors.
  const Operator2 left = right.inverse();
  const Operator2 signs = Eigen::Vector2cd(1.0, -1.0).asDiagonal();
  return right * signs * left;
}

Operator2 cp_operator(const PTParams& params) {
  const double a = alpha_away_from_branch_point(params);
  const double sec = 1.0 / std::cos(a), tan = std::tan(a);
  const Complex i(0.0, 1.0);
  Operator2 cp;
  cp << sec, -i * tan,
        i * tan, sec;
  return cp;
}

Operator2 recover_parity(const PTParams& params) {
  return charge_conjugation(params) * cp_operator(params);
}

CptKit make_cpt_kit(const PTParams& params) {
  CptKit kit;
  kit.params = params;
  kit.c_op = charge_conjugation(params);
  kit.cp_op = cp_operator(params);
  const auto roots = herm_sqrt2<double>(kit.cp_op);
  kit.sqrt_cp = roots.sqrt;
  kit.inv_sqrt_cp = roots.inv_sqrt;
  return kit;
}

Operator2 cpt_propagator(const CptKit& kit, double tau) {
  return kit.inv_sqrt_cp * propagator({kit.params, tau}) * kit.sqrt_cp;
}

Operator2 cpt_propagator(const PTParams& params, double tau) {
  return cpt_propagator(make_cpt_kit(params), tau);
}

}  // namespace ptsig

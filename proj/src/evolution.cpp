#include "ptsig/evolution.hpp"

#include <cmath>

namespace ptsig {

double validate(const EvolutionSpec& spec) {
  if (!std::isfinite(spec.tau) || !std::isfinite(spec.params.r) || !std::isfinite(spec.params.xi))
    throw Error(ErrorKind::NonFinite, "evolution spec");
  return alpha_away_from_branch_point(spec.params);
}

double t1(const EvolutionSpec& spec) {
  return spec.params.t * spec.tau * std::cos(validate(spec));
}

Operator2 propagator(const EvolutionSpec& spec) {
  validate(spec);
  const Complex minus_i_tau(0.0, -spec.tau);
  return mat_exp2<double>(minus_i_tau * build(spec.params));
}

Operator2 gram(const EvolutionSpec& spec) {
  const Operator2 u = propagator(spec);
  const Operator2 g = u.adjoint() * u;
  return (g + g.adjoint()) / 2.0;
}

double werner_normalizer(const EvolutionSpec& spec) {
  const double a = validate(spec);
  const double x = t1(spec);
  const double sec = 1.0 / std::cos(a);
  return 2.0 * sec * sec * std::sin(x) * std::sin(x) + std::cos(2.0 * x);
}

std::array<double, 2> gram_diagonal_closed_form(const EvolutionSpec& spec) {
  const double a = validate(spec);
  const double x = t1(spec);
  const double n = werner_normalizer(spec);
  const double skew = std::tan(a) * std::sin(2.0 * x) * std::sin(spec.params.xi);
  return {n - skew, n + skew};
}

}  // namespace ptsig

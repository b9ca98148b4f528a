#pragma once

#include "ptsig/evolution.hpp"

namespace ptsig {

/// C and the positive metric CP = e^Q of one PT model, with e^{+-Q/2}.
struct CptKit {
  Operator2 c_op;
  Operator2 cp_op;
  Operator2 sqrt_cp;      // e^{Q/2}
  Operator2 inv_sqrt_cp;  // e^{-Q/2}
  PTParams params;
};

/// Charge conjugation
///   C = sec(a) [[cos xi - i sin a sin xi,  i cos xi sin a + sin xi],
///               [i cos xi sin a + sin xi,  i sin a sin xi - cos xi]].
/// Throws AtBranchPoint (and the alpha() errors).
Operator2 charge_conjugation(const PTParams& params);

/// C built from the eigenvectors as |E+><L+| - |E-><L-|, where <L_m| are the
/// biorthogonal duals (<L_m|E_n> = delta_mn). Consistency check for
/// charge_conjugation; both must agree to roundoff.
Operator2 charge_conjugation_spectral(const PTParams& params);

/// CP = [[sec a, -i tan a], [i tan a, sec a]].
Operator2 cp_operator(const PTParams& params);

/// C (CP), which reproduces the canonical parity P(xi).
Operator2 recover_parity(const PTParams& params);

CptKit make_cpt_kit(const PTParams& params);

/// e^{-Q/2} exp(-i H tau) e^{Q/2}; unitary.
Operator2 cpt_propagator(const CptKit& kit, double tau);
Operator2 cpt_propagator(const PTParams& params, double tau);

}  // namespace ptsig

#pragma once

// Test-only reference computations. Nothing here calls into the library's
// implementation paths; they are direct re-evaluations used to check them.

#include <cmath>
#include <complex>

#include <Eigen/Core>

namespace oracle {

using cld = std::complex<long double>;
using Mat2L = Eigen::Matrix<cld, 2, 2>;
using Mat2 = Eigen::Matrix<std::complex<double>, 2, 2>;
using Mat4 = Eigen::Matrix<std::complex<double>, 4, 4>;

/// Plain power series sum_{k < terms} M^k / k!, in long double, no scaling.
inline Mat2 exp_series(const Mat2& m, int terms = 60) {
  const Mat2L ml = m.cast<cld>();
  Mat2L sum = Mat2L::Identity(), term = Mat2L::Identity();
  for (int k = 1; k < terms; ++k) {
    term = (term * ml) / static_cast<long double>(k);
    sum += term;
  }
  return sum.cast<std::complex<double>>();
}

/// The PT Hamiltonian typed in entry by entry.
inline Mat2 hamiltonian(double r, double s, double t, double xi) {
  const std::complex<double> i(0.0, 1.0);
  Mat2 h;
  h(0, 0) = r + t * std::cos(xi) - i * s * std::sin(xi);
  h(0, 1) = i * s * std::cos(xi) + t * std::sin(xi);
  h(1, 0) = i * s * std::cos(xi) + t * std::sin(xi);
  h(1, 1) = r - t * std::cos(xi) + i * s * std::sin(xi);
  return h;
}

/// exp(-i r tau) [[cos t1 - i cos xi sin t1, -i sin xi sin t1], [.., cos t1 + i cos xi sin t1]].
inline Mat2 cpt_unitary(double r, double xi, double t1, double tau) {
  const std::complex<double> i(0.0, 1.0);
  Mat2 u;
  u(0, 0) = std::cos(t1) - i * std::cos(xi) * std::sin(t1);
  u(0, 1) = -i * std::sin(xi) * std::sin(t1);
  u(1, 0) = u(0, 1);
  u(1, 1) = std::cos(t1) + i * std::cos(xi) * std::sin(t1);
  return std::exp(-i * r * tau) * u;
}

/// (U (x) I) rho (U (x) I)^dagger by explicit index sums, traced over A, renormalized.
inline Mat2 evolved_bob_marginal(const Mat4& rho, const Mat2& u) {
  Mat4 x = Mat4::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp)
          for (int c = 0; c < 2; ++c)
            for (int cp = 0; cp < 2; ++cp)
              x(2 * a + b, 2 * ap + bp) += u(a, c) * rho(2 * c + b, 2 * cp + bp) * std::conj(u(ap, cp));
  Mat2 out = Mat2::Zero();
  double tr = 0.0;
  for (int k = 0; k < 4; ++k) tr += x(k, k).real();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp) out(b, bp) += x(2 * a + b, 2 * a + bp) / tr;
  return out;
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle

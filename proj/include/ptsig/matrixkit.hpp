#pragma once

// Fixed-size complex 2x2 / 4x4 kernels. Everything here is templated on the
// real scalar so the same closed forms can be instantiated in long double.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Core>
#include <Eigen/LU>

#include "ptsig/error.hpp"

namespace ptsig {

template <typename Scalar>
using ComplexT = std::complex<Scalar>;
template <typename Scalar>
using Operator2T = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Operator4T = Eigen::Matrix<std::complex<Scalar>, 4, 4>;
template <typename Scalar>
using Ket2T = Eigen::Matrix<std::complex<Scalar>, 2, 1>;

using Complex = ComplexT<double>;
using Operator2 = Operator2T<double>;
using Operator4 = Operator4T<double>;
using Ket2 = Ket2T<double>;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto z = m(i, j);
      if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) return false;
    }
  return true;
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* where) {
  if (!all_finite(m)) throw Error(ErrorKind::NonFinite, where);
}

/// Largest entry modulus.
template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Largest entry modulus of M - M^dagger.
template <typename Derived>
auto hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
struct Eig2 {
  std::array<ComplexT<Scalar>, 2> values;
  std::array<Ket2T<Scalar>, 2> vectors;
};

/// Closed-form eigendecomposition of a general complex 2x2 matrix.
///
/// Eigenvalues are ordered lexicographically on (re, im); eigenvectors have
/// unit Euclidean norm. For each eigenvalue the better conditioned of the two
/// null-space candidates (b, lambda - a) and (lambda - d, c) is used, falling
/// back to the standard basis when M is a multiple of the identity.
template <typename Scalar>
Eig2<Scalar> eig2(const Operator2T<Scalar>& m) {
  using C = ComplexT<Scalar>;
  require_finite(m, "eig2");
  const C a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const C mean = (a + d) / Scalar(2);
  const C half_gap = (a - d) / Scalar(2);
  const C disc = std::sqrt(half_gap * half_gap + b * c);

  std::array<C, 2> lambda{mean - disc, mean + disc};
  if (std::real(lambda[1]) < std::real(lambda[0]) ||
      (std::real(lambda[1]) == std::real(lambda[0]) && std::imag(lambda[1]) < std::imag(lambda[0])))
    std::swap(lambda[0], lambda[1]);

  const Scalar scale = std::max(m.norm(), Scalar(1e-300));
  Eig2<Scalar> out;
  for (int k = 0; k < 2; ++k) {
    Ket2T<Scalar> u1, u2;
    u1 << b, lambda[k] - a;
    u2 << lambda[k] - d, c;
    const Ket2T<Scalar>& best = u1.norm() >= u2.norm() ? u1 : u2;
    out.values[k] = lambda[k];
    if (best.norm() <= Scalar(64) * std::numeric_limits<Scalar>::epsilon() * scale) {
      out.vectors[k] = Ket2T<Scalar>::Unit(k);
    } else {
      out.vectors[k] = best / best.norm();
    }
  }
  return out;
}

namespace detail {

/// exp(M) by scaling and squaring of a truncated Taylor series.
template <typename Scalar>
Operator2T<Scalar> exp_series(const Operator2T<Scalar>& m) {
  const Scalar norm = m.norm();
  int squarings = 0;
  if (norm > Scalar(0.5)) squarings = static_cast<int>(std::ceil(std::log2(norm / Scalar(0.5))));
  const Operator2T<Scalar> scaled = m / std::ldexp(Scalar(1), squarings);

  Operator2T<Scalar> sum = Operator2T<Scalar>::Identity();
  Operator2T<Scalar> term = Operator2T<Scalar>::Identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / Scalar(k);
    sum += term;
    if (term.norm() <= std::numeric_limits<Scalar>::epsilon() * sum.norm() * Scalar(1e-2)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace detail

/// Matrix exponential of a complex 2x2 matrix.
///
/// With A = M - (tr M / 2) I one has A^2 = delta^2 I, where +-delta are the
/// eigenvalues of A. When the eigenvalues of M are separated by more than
/// 1e-8 * ||M||_F the spectral form
///   exp(M) = exp(tr M / 2) * (cosh(delta) I + sinh(delta) / delta * A)
/// is used; otherwise scaling-and-squaring of the Taylor series.
template <typename Scalar>
Operator2T<Scalar> mat_exp2(const Operator2T<Scalar>& m) {
  using C = ComplexT<Scalar>;
  require_finite(m, "mat_exp2");
  const C mean = (m(0, 0) + m(1, 1)) / Scalar(2);
  const Operator2T<Scalar> traceless = m - mean * Operator2T<Scalar>::Identity();
  const C delta =
      std::sqrt(traceless(0, 0) * traceless(0, 0) + traceless(0, 1) * traceless(1, 0));

  const Scalar separation = Scalar(2) * std::abs(delta);
  Operator2T<Scalar> out;
  if (separation > Scalar(1e-8) * m.norm()) {
    out = std::exp(mean) *
          (std::cosh(delta) * Operator2T<Scalar>::Identity() + (std::sinh(delta) / delta) * traceless);
  } else {
    out = detail::exp_series(m);
  }
  require_finite(out, "mat_exp2 overflow");
  return out;
}

/// Eigenvalues (ascending) of a Hermitian 2x2 matrix; only the Hermitian part is read.
template <typename Scalar>
std::array<Scalar, 2> hermitian_eigenvalues2(const Operator2T<Scalar>& m) {
  const Scalar mean = (std::real(m(0, 0)) + std::real(m(1, 1))) / Scalar(2);
  const Scalar half_gap = (std::real(m(0, 0)) - std::real(m(1, 1))) / Scalar(2);
  const Scalar radius = std::hypot(half_gap, std::abs(m(0, 1)));
  return {mean - radius, mean + radius};
}

template <typename Scalar>
struct HermSqrt {
  Operator2T<Scalar> sqrt;
  Operator2T<Scalar> inv_sqrt;
};

/// Principal square root and its inverse of a Hermitian positive definite 2x2 matrix.
///
/// Uses sqrt(M) = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)).
template <typename Scalar>
HermSqrt<Scalar> herm_sqrt2(const Operator2T<Scalar>& m) {
  require_finite(m, "herm_sqrt2");
  const Scalar tol = Scalar(1e-12);
  if (hermiticity_defect(m) > tol * std::max(Scalar(1), max_abs(m)))
    throw Error(ErrorKind::NotHermitian, "herm_sqrt2");
  const Operator2T<Scalar> h = (m + m.adjoint()) / Scalar(2);
  const auto ev = hermitian_eigenvalues2(h);
  if (!(ev[0] > tol)) throw Error(ErrorKind::NotPositiveDefinite, "herm_sqrt2");

  const Scalar root_det = std::sqrt(ev[0] * ev[1]);
  const Scalar denom = std::sqrt(ev[0] + ev[1] + Scalar(2) * root_det);
  HermSqrt<Scalar> out;
  out.sqrt = (h + root_det * Operator2T<Scalar>::Identity()) / denom;
  out.sqrt = (out.sqrt + out.sqrt.adjoint()).eval() / Scalar(2);
  // Cayley-Hamilton: S^-1 = (tr S * I - S) / det S, and det S = sqrt(det M).
  out.inv_sqrt = (out.sqrt.trace() * Operator2T<Scalar>::Identity() - out.sqrt) / root_det;
  return out;
}

/// True when M is Hermitian, unit trace and PSD, each within tol.
template <typename Scalar>
bool is_density2(const Operator2T<Scalar>& m, Scalar tol) {
  if (!all_finite(m)) return false;
  if (hermiticity_defect(m) > tol) return false;
  if (std::abs(m.trace() - ComplexT<Scalar>(1)) > tol) return false;
  return hermitian_eigenvalues2(m)[0] >= -tol;
}

/// Trace distance (1/2) * sum |lambda_i(rho - sigma)| between two qubit states.
template <typename Scalar>
Scalar trace_distance2(const Operator2T<Scalar>& rho, const Operator2T<Scalar>& sigma,
                       Scalar tol = Scalar(1e-12)) {
  if (!is_density2(rho, tol) || !is_density2(sigma, tol))
    throw Error(ErrorKind::InvalidState, "trace_distance2");
  const auto ev = hermitian_eigenvalues2<Scalar>(rho - sigma);
  const Scalar d = (std::abs(ev[0]) + std::abs(ev[1])) / Scalar(2);
  return std::clamp(d, Scalar(0), Scalar(1));
}

/// Kronecker product, first factor on the most significant index.
template <typename Scalar>
Operator4T<Scalar> kron(const Operator2T<Scalar>& left, const Operator2T<Scalar>& right) {
  Operator4T<Scalar> out;
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap) out.template block<2, 2>(2 * a, 2 * ap) = left(a, ap) * right;
  return out;
}

/// M (x) I_2 with the |a>|b> -> 2a + b basis ordering.
template <typename Scalar>
Operator4T<Scalar> kron_left(const Operator2T<Scalar>& m) {
  require_finite(m, "kron_left");
  return kron<Scalar>(m, Operator2T<Scalar>::Identity());
}

/// I_2 (x) M.
template <typename Scalar>
Operator4T<Scalar> kron_right(const Operator2T<Scalar>& m) {
  require_finite(m, "kron_right");
  return kron<Scalar>(Operator2T<Scalar>::Identity(), m);
}

}  // namespace ptsig

#include "ptsig/states.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace ptsig {

namespace {

constexpr double kZeroNorm = 1e-14;

LocalAction renormalize(const Operator4& x) {
  const double norm = std::real(x.trace());
  if (!(norm >= kZeroNorm)) throw Error(ErrorKind::ZeroNorm, "trace after local operation");
  const Operator4 herm = (x + x.adjoint()) / (2.0 * norm);
  return {BipartiteDensity::from_matrix(herm), norm};
}

}  // namespace

std::string describe(const Violation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case Violation::Kind::NonFinite: os << "non-finite entry"; break;
    case Violation::Kind::NotHermitian: os << "not Hermitian (defect " << v.magnitude << ")"; break;
    case Violation::Kind::TraceNotOne: os << "trace differs from 1 by " << v.magnitude; break;
    case Violation::Kind::NotPositive: os << "negative eigenvalue " << -v.magnitude; break;
  }
  return os.str();
}

template <int Dim>
std::vector<Violation> validate(const Eigen::Matrix<Complex, Dim, Dim>& m, double tol) {
  std::vector<Violation> out;
  if (!all_finite(m)) {
    out.push_back({Violation::Kind::NonFinite, 0.0});
    return out;
  }
  if (const double d = hermiticity_defect(m); d > tol) out.push_back({Violation::Kind::NotHermitian, d});
  if (const double d = std::abs(m.trace() - Complex(1.0)); d > tol) out.push_back({Violation::Kind::TraceNotOne, d});

  const Eigen::Matrix<Complex, Dim, Dim> herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, Dim, Dim>> solver(herm, Eigen::EigenvaluesOnly);
  const double lowest = solver.eigenvalues().minCoeff();
  if (lowest < -tol) out.push_back({Violation::Kind::NotPositive, -lowest});
  return out;
}

template std::vector<Violation> validate<2>(const Eigen::Matrix<Complex, 2, 2>&, double);
template std::vector<Violation> validate<4>(const Eigen::Matrix<Complex, 4, 4>&, double);

template <int Dim>
Density<Dim> Density<Dim>::from_matrix(const Matrix& m, double tol) {
  const auto violations = validate<Dim>(m, tol);
  if (!violations.empty()) throw Error(ErrorKind::InvalidState, describe(violations.front()));
  return Density(Matrix((m + m.adjoint()) / 2.0));
}

template class Density<2>;
template class Density<4>;

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Werner: return "werner";
    case FamilyTag::ClassicalCorrelated: return "classical";
    case FamilyTag::MaxEntangled: return "maxent";
    case FamilyTag::Custom: return "custom";
  }
  return "unknown";
}

void check_family(const StateFamily& family) {
  const double p = family.p;
  if (!std::isfinite(p)) throw Error(ErrorKind::NonFinite, "family parameter p");
  switch (family.tag) {
    case FamilyTag::Werner:
      if (p < -1.0 / 3.0 || p > 1.0) throw Error(ErrorKind::OutOfRange, "Werner p must lie in [-1/3, 1]");
      break;
    case FamilyTag::ClassicalCorrelated:
      if (p < 0.0 || p > 1.0) throw Error(ErrorKind::OutOfRange, "classically correlated p must lie in [0, 1]");
      break;
    case FamilyTag::MaxEntangled:
    case FamilyTag::Custom:
      break;
  }
}

CorrelationClass classify(const StateFamily& family) {
  check_family(family);
  switch (family.tag) {
    case FamilyTag::Werner:
      if (family.p > 1.0 / 3.0) return CorrelationClass::Entangled;
      // p = 0 is the product state I/4.
      return family.p == 0.0 ? CorrelationClass::ClassicallyCorrelated : CorrelationClass::SeparableDiscordant;
    case FamilyTag::MaxEntangled:
      return CorrelationClass::Entangled;
    case FamilyTag::ClassicalCorrelated:
      return CorrelationClass::ClassicallyCorrelated;
    case FamilyTag::Custom:
      break;
  }
  return CorrelationClass::Unclassified;
}

BipartiteDensity werner(double p) {
  check_family({FamilyTag::Werner, p});
  Operator4 m = Operator4::Identity() * ((1.0 - p) / 4.0);
  m(0, 0) += p / 2.0;
  m(0, 3) += p / 2.0;
  m(3, 0) += p / 2.0;
  m(3, 3) += p / 2.0;
  return BipartiteDensity::from_matrix(m);
}

BipartiteDensity classical_correlated(double p) {
  check_family({FamilyTag::ClassicalCorrelated, p});
  Operator4 m = Operator4::Zero();
  m(0, 0) = p;
  m(3, 3) = 1.0 - p;
  return BipartiteDensity::from_matrix(m);
}

BipartiteDensity make_state(const StateFamily& family) {
  switch (family.tag) {
    case FamilyTag::Werner: return werner(family.p);
    case FamilyTag::ClassicalCorrelated: return classical_correlated(family.p);
    case FamilyTag::MaxEntangled: return werner(1.0);
    case FamilyTag::Custom: break;
  }
  throw Error(ErrorKind::ConfigError, "custom states must be supplied explicitly");
}

BipartiteDensity product(const QubitDensity& a, const QubitDensity& b) {
  return BipartiteDensity::from_matrix(kron<double>(a.matrix(), b.matrix()));
}

LocalAction apply_local_A(const BipartiteDensity& state, const Operator2& m) {
  const Operator4 big = kron_left<double>(m);
  return renormalize(big * state.matrix() * big.adjoint());
}

LocalAction apply_local_B(const BipartiteDensity& state, const Operator2& m) {
  const Operator4 big = kron_right<double>(m);
  return renormalize(big * state.matrix() * big.adjoint());
}

QubitDensity partial_trace_A(const BipartiteDensity& state) {
  const Operator4& rho = state.matrix();
  Operator2 out = Operator2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp) out(b, bp) += rho(2 * a + b, 2 * a + bp);
  return QubitDensity::from_matrix(out);
}

QubitDensity partial_trace_B(const BipartiteDensity& state) {
  const Operator4& rho = state.matrix();
  Operator2 out = Operator2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b) out(a, ap) += rho(2 * a + b, 2 * ap + b);
  return QubitDensity::from_matrix(out);
}

double trace_distance(const QubitDensity& rho, const QubitDensity& sigma) {
  return trace_distance2<double>(rho.matrix(), sigma.matrix());
}

}  // namespace ptsig

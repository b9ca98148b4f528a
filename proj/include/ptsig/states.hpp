#pragma once

#include <string>
#include <vector>

#include "ptsig/matrixkit.hpp"

namespace ptsig {

/// Roundoff allowance for the density-matrix invariants.
inline constexpr double kStateTol = 1e-12;

struct Violation {
  enum class Kind { NonFinite, NotHermitian, TraceNotOne, NotPositive };
  Kind kind;
  double magnitude;  // size of the offending defect
};

std::string describe(const Violation& v);

/// Hermiticity, unit trace and positive semidefiniteness, each checked within tol.
/// Empty result means the matrix is a valid density matrix.
template <int Dim>
std::vector<Violation> validate(const Eigen::Matrix<Complex, Dim, Dim>& m, double tol);

/// A validated density matrix on Dim levels. Dim = 4 uses the |ab> -> 2a + b ordering.
template <int Dim>
class Density {
 public:
  using Matrix = Eigen::Matrix<Complex, Dim, Dim>;

  /// Validates within tol, then stores the Hermitian part. Throws InvalidState.
  static Density from_matrix(const Matrix& m, double tol = kStateTol);

  const Matrix& matrix() const { return matrix_; }

 private:
  explicit Density(const Matrix& m) : matrix_(m) {}
  Matrix matrix_;
};

using QubitDensity = Density<2>;
using BipartiteDensity = Density<4>;

template <int Dim>
std::vector<Violation> validate(const Density<Dim>& state, double tol) {
  return validate<Dim>(state.matrix(), tol);
}

enum class FamilyTag { Werner, ClassicalCorrelated, MaxEntangled, Custom };

std::string_view to_string(FamilyTag tag);

struct StateFamily {
  FamilyTag tag = FamilyTag::Werner;
  double p = 1.0;
};

/// Throws OutOfRange unless p lies in the family's admissible interval
/// ([-1/3, 1] for Werner, [0, 1] for classically correlated).
void check_family(const StateFamily& family);

/// Correlation class of a member of the two built-in families. Labels only;
/// no discord or entanglement measure is computed.
enum class CorrelationClass { Entangled, SeparableDiscordant, ClassicallyCorrelated, Unclassified };

CorrelationClass classify(const StateFamily& family);

/// p |psi><psi| + (1 - p) I / 4, psi = (|00> + |11>) / sqrt(2).
BipartiteDensity werner(double p);

/// p |00><00| + (1 - p) |11><11|.
BipartiteDensity classical_correlated(double p);

/// State of a built-in family; Custom is rejected with ConfigError.
BipartiteDensity make_state(const StateFamily& family);

BipartiteDensity product(const QubitDensity& a, const QubitDensity& b);

struct LocalAction {
  BipartiteDensity state;
  double norm;  // trace before renormalization
};

/// (M (x) I) rho (M (x) I)^dagger renormalized to unit trace. Throws ZeroNorm
/// when the trace falls below 1e-14.
LocalAction apply_local_A(const BipartiteDensity& state, const Operator2& m);

/// Same as apply_local_A with the operator acting on B.
LocalAction apply_local_B(const BipartiteDensity& state, const Operator2& m);

/// Reduced state of B.
QubitDensity partial_trace_A(const BipartiteDensity& state);

/// Reduced state of A.
QubitDensity partial_trace_B(const BipartiteDensity& state);

double trace_distance(const QubitDensity& rho, const QubitDensity& sigma);

}  // namespace ptsig

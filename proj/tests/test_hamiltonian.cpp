#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ptsig/hamiltonian.hpp"
#include "ptsig/sampling.hpp"

using namespace ptsig;

namespace {

template <typename F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ConfigError;
}

}  // namespace

TEST(Alpha, Examples) {
  EXPECT_NEAR(alpha({0.0, 0.5, 1.0, 0.0, 1.0}), std::numbers::pi / 6, 1e-15);
  EXPECT_EQ(alpha({0.0, 0.0, 1.0, 0.0, 1.0}), 0.0);
  EXPECT_EQ(alpha({0.0, 0.0, 0.0, 0.0, 1.0}), 0.0);
  EXPECT_EQ(error_kind_of([] { alpha({0.0, 2.0, 1.0, 0.0, 1.0}); }), ErrorKind::BrokenPTPhase);
  EXPECT_EQ(error_kind_of([] { alpha({0.0, 0.3, 0.0, 0.0, 1.0}); }), ErrorKind::DegenerateScale);
}

TEST(Build, Examples) {
  EXPECT_EQ(build({1.0, 0.0, 0.0, 0.4, 1.0}), Operator2::Identity());
  Operator2 sz;
  sz << 1.0, 0.0, 0.0, -1.0;
  EXPECT_EQ(build({0.0, 0.0, 1.0, 0.0, 1.0}), sz);
}

TEST(Build, MatchesEntrywiseOracle) {
  const Operator2 h = build({0.0, 0.5, 1.0, 0.7, 1.0});
  EXPECT_LT(oracle::max_abs_diff(h, oracle::hamiltonian(0.0, 0.5, 1.0, 0.7)), 1e-16);
  // 40-digit reference values.
  EXPECT_NEAR(h(0, 0).real(), 0.76484218728448842626, 1e-15);
  EXPECT_NEAR(h(0, 0).imag(), -0.32210884361884552684, 1e-15);
  EXPECT_NEAR(h(0, 1).real(), 0.64421768723769105367, 1e-15);
  EXPECT_NEAR(h(0, 1).imag(), 0.38242109364224421313, 1e-15);
  EXPECT_EQ(h(0, 1), h(1, 0));
}

TEST(Build, DoesNotScaleByJ) {
  EXPECT_EQ(build({0.1, 0.2, 0.9, 0.3, 1.0}), build({0.1, 0.2, 0.9, 0.3, 7.5}));
}

TEST(Parity, Examples) {
  Operator2 sz, sx;
  sz << 1.0, 0.0, 0.0, -1.0;
  sx << 0.0, 1.0, 1.0, 0.0;
  EXPECT_EQ(parity(0.0), sz);
  EXPECT_LT(max_abs((parity(std::numbers::pi / 2) - sx).eval()), 1e-16);
  for (double phi : {-2.0, 0.3, 1.1, 3.0}) {
    const Operator2 p = parity(phi);
    EXPECT_LT(max_abs((p * p - Operator2::Identity()).eval()), 1e-15);
    EXPECT_NEAR(p.determinant().real(), -1.0, 1e-15);
    EXPECT_EQ(p, p.transpose());
  }
}

TEST(CheckPTSymmetry, Examples) {
  EXPECT_LE(check_pt_symmetry(build({0.0, 0.5, 1.0, 0.7, 1.0}), 0.7), 1e-14);
  Operator2 sz;
  sz << 1.0, 0.0, 0.0, -1.0;
  EXPECT_EQ(check_pt_symmetry(sz, 0.0), 0.0);
  Operator2 bad;
  bad << Complex(0.0, 1.0), 0.0, 0.0, 0.0;
  EXPECT_GT(check_pt_symmetry(bad, 0.0), 0.5);
}

TEST(CheckPTSymmetry, HoldsForSampledParams) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    const PTParams p = sampling::pt_params(rng);
    EXPECT_LE(check_pt_symmetry(build(p), p.xi), 1e-13);
  }
}

TEST(Hermiticity, DefectVanishesOnlyWithoutS) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    PTParams p = sampling::pt_params(rng);
    EXPECT_GT(hermiticity_defect(build(p)), 0.0);
    p.s = 0.0;
    EXPECT_EQ(hermiticity_defect(build(p)), 0.0);
  }
}

TEST(Spectrum, HermitianDiagonalLimit) {
  const Spectrum sp = spectrum({1.0, 0.0, 1.0, 0.0, 2.0});
  EXPECT_NEAR(sp.e_plus, 4.0, 1e-15);
  EXPECT_NEAR(sp.e_minus, 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sp.v_plus(0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(sp.v_minus(1)), 1.0, 1e-15);
}

TEST(Spectrum, MatchesEig2) {
  const PTParams p{0.0, 0.5, 1.0, 0.3, 1.0};
  const Spectrum sp = spectrum(p);
  const double c = std::cos(std::numbers::pi / 6);
  EXPECT_NEAR(sp.e_plus, c, 1e-15);
  EXPECT_NEAR(sp.e_minus, -c, 1e-15);
  const auto e = eig2<double>(build(p));
  EXPECT_NEAR(std::abs(e.values[1] - Complex(sp.e_plus)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e.values[0] - Complex(sp.e_minus)), 0.0, 1e-14);
  // Same rays up to phase.
  EXPECT_NEAR(std::abs(e.vectors[1].dot(sp.v_plus)), 1.0, 1e-13);
  EXPECT_NEAR(std::abs(e.vectors[0].dot(sp.v_minus)), 1.0, 1e-13);
}

TEST(Spectrum, EigenpairResidualsOverSamples) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    const PTParams p = sampling::pt_params(rng);
    const Operator2 h = build(p);
    const Spectrum sp = spectrum(p);
    EXPECT_NEAR(sp.v_plus.norm(), 1.0, 1e-14);
    EXPECT_NEAR(sp.v_minus.norm(), 1.0, 1e-14);
    EXPECT_LT((h * sp.v_plus - sp.e_plus * sp.v_plus).norm(), 1e-13);
    EXPECT_LT((h * sp.v_minus - sp.e_minus * sp.v_minus).norm(), 1e-13);
    // eigenvalues of the matrix are real and equal r +- t cos(alpha)
    const auto e = eig2<double>(h);
    EXPECT_LT(std::abs(e.values[0].imag()), 1e-12);
    EXPECT_LT(std::abs(e.values[1] - Complex(sp.e_plus)), 1e-12);
  }
}

TEST(Spectrum, SimpleEigenvectorFormHoldsAtXiZero) {
  // (+-sin xi sin a - i sin a, 1 -+ cos a cos xi) is an eigenvector pair only
  // at xi = 0; there ours must span the same rays.
  const double a = 0.5;
  const PTParams p{0.0, std::sin(a), 1.0, 0.0, 1.0};
  const Spectrum sp = spectrum(p);
  const Complex i(0.0, 1.0);
  Ket2 plus(-i * std::sin(a), 1.0 - std::cos(a));
  Ket2 minus(-i * std::sin(a), 1.0 + std::cos(a));
  EXPECT_NEAR(std::abs(plus.normalized().dot(sp.v_plus)), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(minus.normalized().dot(sp.v_minus)), 1.0, 1e-14);
}

TEST(Spectrum, BranchPoint) {
  EXPECT_EQ(error_kind_of([] { spectrum({0.0, 1.0, 1.0, 0.3, 1.0}); }), ErrorKind::AtBranchPoint);
  EXPECT_EQ(error_kind_of([] { spectrum({0.0, -0.8, 0.8, 0.3, 1.0}); }), ErrorKind::AtBranchPoint);
  EXPECT_EQ(error_kind_of([] { spectrum({0.0, 1.5, 1.0, 0.3, 1.0}); }), ErrorKind::BrokenPTPhase);
}

TEST(Overlap, VanishesOnlyInHermitianLimit) {
  EXPECT_LT(std::abs(overlap_eigenstates(spectrum({0.2, 0.0, 1.0, 0.9, 1.0}))), 1e-12);
  const Complex ov = overlap_eigenstates(spectrum({0.0, 0.5, 1.0, 0.0, 1.0}));
  EXPECT_NEAR(std::abs(ov), 0.5, 1e-14);  // |sin(pi/6)|
}

TEST(Overlap, ApproachesOneNearBranchPoint) {
  double previous = 0.0;
  for (double a : {1.0, 1.3, 1.5, 1.56, 1.5707}) {
    const double m = std::abs(overlap_eigenstates(spectrum({0.0, std::sin(a), 1.0, 0.4, 1.0})));
    EXPECT_GT(m, previous);
    previous = m;
  }
  EXPECT_GT(previous, 0.9999);
}

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ptsig/evolution.hpp"
#include "ptsig/sampling.hpp"

using namespace ptsig;

namespace {

const Operator2 kId = Operator2::Identity();

EvolutionSpec at(double alpha_value, double t1_value, double xi, double r = 0.0, double t = 1.0) {
  return {{r, t * std::sin(alpha_value), t, xi, 1.0}, t1_value / (t * std::cos(alpha_value))};
}

}  // namespace

TEST(T1, Examples) {
  EXPECT_EQ(t1({{0.0, 0.0, 1.0, 0.0, 1.0}, 1.0}), 1.0);
  EXPECT_NEAR(t1({{0.0, std::sin(std::numbers::pi / 3), 1.0, 0.0, 1.0}, 2.0}), 1.0, 1e-15);
  EXPECT_EQ(t1({{0.0, 0.0, 0.0, 0.0, 1.0}, 5.0}), 0.0);
}

TEST(Propagator, HermitianDiagonalCase) {
  const double theta = 0.83;
  const Operator2 u = propagator({{0.0, 0.0, 1.0, 0.0, 1.0}, theta});
  Operator2 expected = Operator2::Zero();
  expected(0, 0) = std::exp(Complex(0.0, -theta));
  expected(1, 1) = std::exp(Complex(0.0, theta));
  EXPECT_LT(max_abs((u - expected).eval()), 1e-15);
}

TEST(Propagator, ZeroTimeIsIdentity) {
  EXPECT_LT(max_abs((propagator({{0.3, 0.5, 1.0, 0.7, 1.0}, 0.0}) - kId).eval()), 1e-16);
}

TEST(Propagator, NonUnitaryAtGenericPoint) {
  const EvolutionSpec s{{0.0, 0.5, 1.0, 0.7, 1.0}, 1.3};
  const Operator2 u = propagator(s);
  const Operator2 ref = oracle::exp_series(Complex(0.0, -1.3) * oracle::hamiltonian(0.0, 0.5, 1.0, 0.7));
  EXPECT_LT(max_abs((u - ref).eval()), 1e-13);
  const double defect = max_abs((u.adjoint() * u - kId).eval());
  EXPECT_GT(defect, 1e-3);
  EXPECT_NEAR(defect, 1.139213275089004, 1e-12);  // 40-digit series reference
}

TEST(Propagator, DeterminantIdentity) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 1000; ++k) {
    const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
    const Complex expected = std::exp(Complex(0.0, -2.0 * s.params.r * s.tau));
    EXPECT_LT(std::abs(propagator(s).determinant() - expected), 1e-10);
  }
}

TEST(Propagator, GroupProperty) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 500; ++k) {
    const PTParams p = sampling::pt_params(rng);
    const double a = sampling::uniform(rng, 0.0, 5.0), b = sampling::uniform(rng, 0.0, 5.0);
    const Operator2 lhs = propagator({p, a}) * propagator({p, b});
    EXPECT_LT(max_abs((lhs - propagator({p, a + b})).eval()), 1e-10 * std::max(1.0, max_abs(lhs)));
  }
}

TEST(Propagator, BranchPointRejected) {
  try {
    propagator({{0.0, 1.0, 1.0, 0.0, 1.0}, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AtBranchPoint);
  }
}

TEST(Gram, HermitianCaseIsIdentity) {
  EXPECT_LT(max_abs((gram({{0.4, 0.0, 1.3, 0.9, 1.0}, 2.2}) - kId).eval()), 1e-14);
}

TEST(Gram, SinT1ZeroIsIdentity) {
  const EvolutionSpec s = at(std::numbers::pi / 6, std::numbers::pi, 0.7);
  const auto cf = gram_diagonal_closed_form(s);
  EXPECT_NEAR(cf[0], 1.0, 1e-14);
  EXPECT_NEAR(cf[1], 1.0, 1e-14);
  EXPECT_LT(max_abs((gram(s) - kId).eval()), 1e-13);
}

TEST(Gram, GenericMatchesClosedForm) {
  const EvolutionSpec s = at(std::numbers::pi / 6, 0.9, 0.7);
  const Operator2 u = oracle::exp_series(Complex(0.0, -s.tau) *
                                         oracle::hamiltonian(0.0, s.params.s, s.params.t, s.params.xi));
  const Operator2 g_ref = u.adjoint() * u;
  const Operator2 g = gram(s);
  EXPECT_LT(max_abs((g - g_ref).eval()), 1e-13);
  const auto cf = gram_diagonal_closed_form(s);
  EXPECT_NEAR(g(0, 0).real(), cf[0], 1e-10);
  EXPECT_NEAR(g(1, 1).real(), cf[1], 1e-10);
}

TEST(Gram, FrozenReferenceValues) {
  const Operator2 g = gram({{0.0, 0.5, 1.0, 0.7, 1.0}, 1.3});
  EXPECT_NEAR(g(0, 0).real(), 1.254150049105704719, 1e-12);
  EXPECT_NEAR(g(1, 1).real(), 1.8321626569145448831, 1e-12);
  EXPECT_NEAR(g(0, 1).real(), 0.34312037374364358293, 1e-12);
  EXPECT_NEAR(g(0, 1).imag(), 1.0863127060202496021, 1e-12);
}

TEST(Gram, PropertiesOverSamples) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 1000; ++k) {
    const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
    const Operator2 g = gram(s);
    EXPECT_LT(hermiticity_defect(g), 1e-15);
    EXPECT_GT(hermitian_eigenvalues2<double>(g)[0], 0.0);
    const auto cf = gram_diagonal_closed_form(s);
    EXPECT_NEAR(g(0, 0).real(), cf[0], 1e-10);
    EXPECT_NEAR(g(1, 1).real(), cf[1], 1e-10);
    EXPECT_NEAR(g.trace().real(), 2.0 * werner_normalizer(s), 1e-10);
  }
}

TEST(Gram, NegativeTKeepsClosedForm) {
  const EvolutionSpec s{{0.1, -0.3, -0.9, 0.4, 1.0}, 2.1};
  const Operator2 g = gram(s);
  const auto cf = gram_diagonal_closed_form(s);
  EXPECT_NEAR(g(0, 0).real(), cf[0], 1e-12);
  EXPECT_NEAR(g(1, 1).real(), cf[1], 1e-12);
}

TEST(WernerNormalizer, AlgebraicIdentity) {
  std::mt19937_64 rng(10);
  for (int k = 0; k < 1000; ++k) {
    const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
    const double n2 = werner_normalizer(s);
    const double x = t1(s), ta = std::tan(alpha(s.params));
    EXPECT_NEAR(n2, 1.0 + 2.0 * std::sin(x) * std::sin(x) * ta * ta, 1e-12 * n2);
    EXPECT_GE(n2, 1.0 - 1e-15);
  }
}

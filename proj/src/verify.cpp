#include "ptsig/verify.hpp"

#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <random>

#include "ptsig/sampling.hpp"
#include "ptsig/signaling.hpp"

namespace ptsig {

namespace {

using Rng = std::mt19937_64;

class Tracker {
 public:
  Tracker(std::string name, double tolerance) : result_{std::move(name), true, 0.0, tolerance, 0} {}

  void observe(double residual) {
    ++result_.cases;
    if (!(residual <= result_.worst)) result_.worst = residual;  // NaN sticks
    if (!(residual <= result_.tolerance)) result_.passed = false;
  }
  void expect(bool condition) { observe(condition ? 0.0 : std::numeric_limits<double>::infinity()); }

  SuiteResult finish() const { return result_; }

 private:
  SuiteResult result_;
};

// Explicit unitary the CPT construction must reproduce. Kept independent of
// the construction path in cpt.cpp.
Operator2 explicit_cpt_unitary(const PTParams& params, double tau) {
  const double x = t1({params, tau});
  const Complex i(0.0, 1.0);
  Operator2 u;
  u << std::cos(x) - i * std::cos(params.xi) * std::sin(x), -i * std::sin(params.xi) * std::sin(x),
       -i * std::sin(params.xi) * std::sin(x), std::cos(x) + i * std::cos(params.xi) * std::sin(x);
  return std::exp(-i * params.r * tau) * u;
}

using SuiteBody = std::function<void(Tracker&, Rng&)>;

struct SuiteSpec {
  const char* name;
  double tolerance;
  SuiteBody body;
};

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  const std::size_t n = options.samples;
  const Operator2 id = Operator2::Identity();

  const std::vector<SuiteSpec> suites = {
      {"exp(M)exp(-M)=I", 1e-10,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const Operator2 m = sampling::operator2(rng, sampling::uniform(rng, 0.0, 5.0));
           tr.observe(max_abs((mat_exp2<double>(m) * mat_exp2<double>(Operator2(-m)) - id).eval()));
         }
       }},
      {"eig2 residual", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const Operator2 m = sampling::operator2(rng, sampling::uniform(rng, 0.1, 10.0));
           const auto e = eig2<double>(m);
           for (int j = 0; j < 2; ++j)
             tr.observe((m * e.vectors[j] - e.values[j] * e.vectors[j]).norm() / m.norm());
         }
       }},
      {"herm_sqrt2 inverse", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const Operator2 g = sampling::operator2(rng, 1.0);
           const Operator2 m = g * g.adjoint() + 0.05 * id;
           const auto root = herm_sqrt2<double>(m);
           tr.observe(max_abs((root.sqrt * root.inv_sqrt - id).eval()));
           tr.observe(max_abs((root.sqrt * root.sqrt - m).eval()));
         }
       }},
      {"trace distance metric", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const auto a = sampling::density<2>(rng), b = sampling::density<2>(rng), c = sampling::density<2>(rng);
           const double ab = trace_distance(a, b), ba = trace_distance(b, a);
           tr.observe(std::abs(ab - ba));
           tr.observe(std::max(0.0, -ab));
           tr.observe(std::max(0.0, ab - trace_distance(a, c) - trace_distance(c, b)));
         }
       }},
      {"kron_left homomorphism", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const Operator2 a = sampling::operator2(rng, 1.0), b = sampling::operator2(rng, 1.0);
           tr.observe(max_abs((kron_left<double>(a) * kron_left<double>(b) - kron_left<double>(a * b)).eval()));
         }
       }},
      {"H eigenvalues r +- t cos(alpha)", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           const double ca = std::cos(alpha(p));
           const auto e = eig2<double>(build(p));
           const double lo = p.r - std::abs(p.t) * ca, hi = p.r + std::abs(p.t) * ca;
           tr.observe(std::abs(e.values[0] - Complex(lo)));
           tr.observe(std::abs(e.values[1] - Complex(hi)));
         }
       }},
      {"PT symmetry with P(xi)", 1e-13,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           tr.observe(check_pt_symmetry(build(p), p.xi));
         }
       }},
      {"det U = exp(-2 i r tau)", 1e-10,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
           const Complex expected = std::exp(Complex(0.0, -2.0 * s.params.r * s.tau));
           tr.observe(std::abs(propagator(s).determinant() - expected));
         }
       }},
      {"U(t1) U(t2) = U(t1 + t2)", 1e-10,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           const double a = sampling::uniform(rng, 0.0, 5.0), b = sampling::uniform(rng, 0.0, 5.0);
           const Operator2 lhs = propagator({p, a}) * propagator({p, b});
           tr.observe(max_abs((lhs - propagator({p, a + b})).eval()) / std::max(1.0, max_abs(lhs)));
         }
       }},
      {"Gram diagonal closed form", 1e-10,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
           const Operator2 g = gram(s);
           const auto cf = gram_diagonal_closed_form(s);
           tr.observe(std::abs(std::real(g(0, 0)) - cf[0]));
           tr.observe(std::abs(std::real(g(1, 1)) - cf[1]));
         }
       }},
      {"N2 = 1 + 2 sin^2 t1 tan^2 alpha >= 1", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
           const double n2 = werner_normalizer(s);
           const double x = t1(s), ta = std::tan(alpha(s.params));
           tr.observe(std::abs(n2 - (1.0 + 2.0 * std::sin(x) * std::sin(x) * ta * ta)) / n2);
           tr.observe(std::max(0.0, 1.0 - n2));
         }
       }},
      {"C^2=I", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           Operator2 c = charge_conjugation(sampling::pt_params(rng));
           if (options.flip_c_sign) c(0, 1) = -c(0, 1);
           tr.observe(max_abs((c * c - id).eval()));
         }
       }},
      {"[C,H]=0", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           const Operator2 c = charge_conjugation(p), h = build(p);
           tr.observe(max_abs((c * h - h * c).eval()));
         }
       }},
      {"C commutes with PT", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           tr.observe(check_pt_symmetry(charge_conjugation(p), p.xi));
         }
       }},
      {"CP = C P(xi)", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           tr.observe(max_abs((charge_conjugation(p) * parity(p.xi) - cp_operator(p)).eval()));
         }
       }},
      {"P(xi) = C (CP)", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           tr.observe(max_abs((recover_parity(p) - parity(p.xi)).eval()));
         }
       }},
      {"C from biorthogonal eigenprojectors", 1e-10,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           tr.observe(max_abs((charge_conjugation_spectral(p) - charge_conjugation(p)).eval()));
         }
       }},
      {"CPT propagator unitary", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           const Operator2 u = cpt_propagator(p, sampling::uniform(rng, 0.0, 10.0));
           tr.observe(max_abs((u.adjoint() * u - id).eval()));
         }
       }},
      {"CPT propagator explicit form", 1e-10,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const PTParams p = sampling::pt_params(rng);
           const double tau = sampling::uniform(rng, 0.0, 10.0);
           tr.observe(max_abs((cpt_propagator(p, tau) - explicit_cpt_unitary(p, tau)).eval()));
         }
       }},
      {"Werner closed-form marginal", 1e-10,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
           const double p = sampling::uniform(rng, -1.0 / 3.0, 1.0);
           const auto brute = bob_marginal({{FamilyTag::Werner, p}, s, Mode::Naive, std::nullopt});
           tr.observe(max_abs((brute.matrix() - closed_form_werner_marginal(p, s).matrix()).eval()));
         }
       }},
      {"classical closed-form marginal", 1e-10,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
           const double p = sampling::uniform(rng, 0.0, 1.0);
           const auto brute = bob_marginal({{FamilyTag::ClassicalCorrelated, p}, s, Mode::Naive, std::nullopt});
           tr.observe(max_abs((brute.matrix() - closed_form_classical_marginal(p, s).matrix()).eval()));
         }
       }},
      {"CPT restoration on random states", 1e-12,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < n; ++k) {
           const EvolutionSpec s{sampling::pt_params(rng), sampling::uniform(rng, 0.0, 10.0)};
           const Scenario sc{{FamilyTag::Custom, 0.0}, s, Mode::Cpt, sampling::density<4>(rng)};
           tr.observe(signaling_measure(sc));
         }
       }},
      {"predicate agrees with measure", 0.0,
       [&](Tracker& tr, Rng& rng) {
         const double alphas[] = {0.0, 0.3, 1.2};
         const double t1s[] = {0.0, 0.7, std::numbers::pi / 2, std::numbers::pi};
         const double xis[] = {0.0, 0.7, std::numbers::pi};
         const double ps[] = {0.0, 0.25, 1.0};
         for (FamilyTag tag : {FamilyTag::Werner, FamilyTag::ClassicalCorrelated})
           for (double a : alphas)
             for (double x : t1s)
               for (double xi : xis)
                 for (double p : ps) {
                   const double t = sampling::uniform(rng, 0.5, 1.5);
                   const PTParams params{sampling::uniform(rng, -1.0, 1.0), t * std::sin(a), t, xi, 1.0};
                   const EvolutionSpec s{params, x / (t * std::cos(a))};
                   const bool quiet =
                       signaling_measure({{tag, p}, s, Mode::Naive, std::nullopt}) <= kNoSignalingThreshold;
                   tr.expect(quiet == no_signaling_predicate({tag, p}, s));
                 }
       }},
      {"branch points raise AtBranchPoint", 0.0,
       [&](Tracker& tr, Rng& rng) {
         for (std::size_t k = 0; k < 100; ++k) {
           const double t = sampling::uniform(rng, -2.0, 2.0);
           const PTParams p{0.0, k % 2 ? t : -t, t, sampling::uniform(rng, -3.0, 3.0), 1.0};
           const std::vector<std::function<void()>> calls = {
               [&] { spectrum(p); },           [&] { propagator({p, 1.0}); },
               [&] { charge_conjugation(p); }, [&] { cp_operator(p); },
               [&] { cpt_propagator(p, 1.0); }};
           for (const auto& call : calls) {
             try {
               call();
               tr.expect(false);
             } catch (const Error& e) {
               tr.expect(e.kind() == ErrorKind::AtBranchPoint);
             }
           }
         }
       }},
  };

  std::vector<SuiteResult> results;
  results.reserve(suites.size());
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Rng rng(options.seed + 0x9E3779B97F4A7C15ull * (i + 1));
    Tracker tracker(suites[i].name, suites[i].tolerance);
    try {
      suites[i].body(tracker, rng);
    } catch (const std::exception&) {
      tracker.expect(false);
    }
    results.push_back(tracker.finish());
  }
  return results;
}

void print_report(std::ostream& os, const std::vector<SuiteResult>& results) {
  char line[256];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%s %-40s worst=%.3e tol=%.1e cases=%zu\n", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.worst, r.tolerance, r.cases);
    os << line;
  }
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  os << passed << '/' << results.size() << " suites passed\n";
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace ptsig

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ptsig/cpt.hpp"
#include "ptsig/states.hpp"

namespace ptsig {

/// Naive: Alice applies exp(-i H tau). Cpt: Alice applies the CPT-unitarized propagator.
enum class Mode { Naive, Cpt };

std::string_view to_string(Mode mode);

/// Threshold below which a signaling measure counts as "no signaling" when
/// compared with the analytic predicate.
inline constexpr double kNoSignalingThreshold = 1e-10;

struct Scenario {
  StateFamily family;
  EvolutionSpec spec;
  Mode mode = Mode::Naive;
  /// Required iff family.tag == FamilyTag::Custom.
  std::optional<BipartiteDensity> custom;
};

BipartiteDensity initial_state(const Scenario& sc);

/// Operator Alice applies in this scenario.
Operator2 local_operator(const Scenario& sc);

/// Bob's reduced state before Alice acts.
QubitDensity before_marginal(const Scenario& sc);

/// Bob's reduced state after Alice acts and the joint state is renormalized.
QubitDensity bob_marginal(const Scenario& sc);

struct Assessment {
  QubitDensity before;
  QubitDensity after;
  double norm;       // trace of the joint state before renormalization
  double signaling;  // trace distance between before and after
};

Assessment assess(const Scenario& sc);

/// Trace distance between Bob's marginals before and after Alice's operation.
double signaling_measure(const Scenario& sc);

/// Off-diagonal w21 of the unnormalized Werner marginal,
///   p tan(a) sin(t1) (cos(t1) cos(xi) + i sec(a) sin(t1)),
/// which equals (p / 2) <0|U^dagger U|1>.
Complex werner_offdiagonal_closed_form(double p, const EvolutionSpec& spec);

/// (1/N2) [[w11, w12], [w21, w22]] with N2 = werner_normalizer(spec) and
/// w11,22 = (N2 -+ p tan(a) sin(2 t1) sin(xi)) / 2.
QubitDensity closed_form_werner_marginal(double p, const EvolutionSpec& spec);

/// N3 = (1 - 2p) tan(a) sin(xi) sin(2 t1) + 2 sec^2(a) sin^2(t1) + cos(2 t1).
double classical_normalizer(double p, const EvolutionSpec& spec);

/// (1/N3) diag(p <0|U^dag U|0>, (1 - p) <1|U^dag U|1>) from the closed-form Gram diagonal.
QubitDensity closed_form_classical_marginal(double p, const EvolutionSpec& spec);

/// Analytic no-signaling condition for naive evolution.
///   Werner:     alpha = 0  or  sin t1 = 0  or  p = 0
///   Classical:  alpha = 0  or  sin 2 t1 = 0  or  sin xi = 0  or  p in {0, 1}
/// Zero tests use an absolute tolerance of 1e-12. Custom states have no
/// closed form and raise ConfigError.
bool no_signaling_predicate(const StateFamily& family, const EvolutionSpec& spec);

enum class SweepStatus { Ok, BranchPoint, BrokenPhase, ZeroNorm };

std::string_view to_string(SweepStatus status);

struct SweepConfig {
  std::vector<double> r{0.0};
  std::vector<double> s{0.0};
  std::vector<double> t{1.0};
  std::vector<double> xi{0.0};
  std::vector<double> tau{1.0};
  std::vector<double> p{1.0};
  std::vector<FamilyTag> families{FamilyTag::Werner};
  std::vector<Mode> modes{Mode::Naive};
  /// Worker threads; 0 uses std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SweepRecord {
  double r = 0.0, s = 0.0, t = 0.0, xi = 0.0, tau = 0.0;
  std::optional<double> alpha;
  std::optional<double> t1;
  FamilyTag family = FamilyTag::Werner;
  double p = 0.0;
  Mode mode = Mode::Naive;
  std::optional<double> norm;
  std::optional<double> signaling;
  SweepStatus status = SweepStatus::Ok;
};

/// Throws ConfigError for empty or non-finite grids, custom families, or p
/// values outside a requested family's range.
void check_config(const SweepConfig& config);

/// Number of grid points (records) the config expands to.
std::size_t grid_size(const SweepConfig& config);

/// Evaluates every grid point. Records come back in ascending grid index
/// (family, mode, r, s, t, xi, tau, p; p fastest) independent of threading.
/// Points at a branch point, in the broken phase or with zero norm are kept
/// and flagged through status.
std::vector<SweepRecord> sweep(const SweepConfig& config);

}  // namespace ptsig

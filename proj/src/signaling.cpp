#include "ptsig/signaling.hpp"

#include <atomic>
#include <cmath>
#include <thread>

namespace ptsig {

namespace {

constexpr double kZeroTest = 1e-12;

bool is_zero(double x) { return std::abs(x) <= kZeroTest; }

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::Naive ? "naive" : "cpt";
}

std::string_view to_string(SweepStatus status) {
  switch (status) {
    case SweepStatus::Ok: return "ok";
    case SweepStatus::BranchPoint: return "branch_point";
    case SweepStatus::BrokenPhase: return "broken_phase";
    case SweepStatus::ZeroNorm: return "zero_norm";
  }
  return "unknown";
}

BipartiteDensity initial_state(const Scenario& sc) {
  if (sc.family.tag == FamilyTag::Custom) {
    if (!sc.custom) throw Error(ErrorKind::ConfigError, "custom family without a state");
    return *sc.custom;
  }
  return make_state(sc.family);
}

Operator2 local_operator(const Scenario& sc) {
  return sc.mode == Mode::Naive ? propagator(sc.spec) : cpt_propagator(sc.spec.params, sc.spec.tau);
}

QubitDensity before_marginal(const Scenario& sc) {
  return partial_trace_A(initial_state(sc));
}

Assessment assess(const Scenario& sc) {
  const BipartiteDensity start = initial_state(sc);
  const LocalAction acted = apply_local_A(start, local_operator(sc));
  QubitDensity before = partial_trace_A(start);
  QubitDensity after = partial_trace_A(acted.state);
  const double d = trace_distance(before, after);
  return {before, after, acted.norm, d};
}

QubitDensity bob_marginal(const Scenario& sc) {
  return assess(sc).after;
}

double signaling_measure(const Scenario& sc) {
  return assess(sc).signaling;
}

Complex werner_offdiagonal_closed_form(double p, const EvolutionSpec& spec) {
  const double a = validate(spec);
  const double x = t1(spec);
  const double sec = 1.0 / std::cos(a);
  return p * std::tan(a) * std::sin(x) * Complex(std::cos(x) * std::cos(spec.params.xi), sec * std::sin(x));
}

QubitDensity closed_form_werner_marginal(double p, const EvolutionSpec& spec) {
  check_family({FamilyTag::Werner, p});
  const double a = validate(spec);
  const double x = t1(spec);
  const double n2 = werner_normalizer(spec);
  const double skew = p * std::tan(a) * std::sin(2.0 * x) * std::sin(spec.params.xi);
  const Complex w21 = werner_offdiagonal_closed_form(p, spec);

  Operator2 w;
  w << 0.5 * (n2 - skew), std::conj(w21),
       w21, 0.5 * (n2 + skew);
  return QubitDensity::from_matrix(w / n2);
}

double classical_normalizer(double p, const EvolutionSpec& spec) {
  const double a = validate(spec);
  const double x = t1(spec);
  const double sec = 1.0 / std::cos(a);
  return (1.0 - 2.0 * p) * std::tan(a) * std::sin(spec.params.xi) * std::sin(2.0 * x) +
         2.0 * sec * sec * std::sin(x) * std::sin(x) + std::cos(2.0 * x);
}

QubitDensity closed_form_classical_marginal(double p, const EvolutionSpec& spec) {
  check_family({FamilyTag::ClassicalCorrelated, p});
  const auto diag = gram_diagonal_closed_form(spec);
  const double n3 = classical_normalizer(p, spec);
  if (!(n3 >= 1e-14)) throw Error(ErrorKind::ZeroNorm, "N3");
  Operator2 m = Operator2::Zero();
  m(0, 0) = p * diag[0] / n3;
  m(1, 1) = (1.0 - p) * diag[1] / n3;
  return QubitDensity::from_matrix(m);
}

bool no_signaling_predicate(const StateFamily& family, const EvolutionSpec& spec) {
  check_family(family);
  const double a = validate(spec);
  const double x = t1(spec);
  switch (family.tag) {
    case FamilyTag::Werner:
    case FamilyTag::MaxEntangled: {
      const double p = family.tag == FamilyTag::Werner ? family.p : 1.0;
      return is_zero(a) || is_zero(std::sin(x)) || is_zero(p);
    }
    case FamilyTag::ClassicalCorrelated: {
      const double p = family.p;
      return is_zero(a) || is_zero(std::sin(2.0 * x)) || is_zero(std::sin(spec.params.xi)) || is_zero(p) ||
             is_zero(1.0 - p);
    }
    case FamilyTag::Custom:
      break;
  }
  throw Error(ErrorKind::ConfigError, "no analytic predicate for custom states");
}

void check_config(const SweepConfig& config) {
  const auto check_grid = [](const std::vector<double>& grid, const char* name) {
    if (grid.empty()) throw Error(ErrorKind::ConfigError, std::string("empty grid for ") + name);
    for (double v : grid)
      if (!std::isfinite(v)) throw Error(ErrorKind::ConfigError, std::string("non-finite value in grid ") + name);
  };
  check_grid(config.r, "r");
  check_grid(config.s, "s");
  check_grid(config.t, "t");
  check_grid(config.xi, "xi");
  check_grid(config.tau, "tau");
  check_grid(config.p, "p");
  if (config.families.empty()) throw Error(ErrorKind::ConfigError, "no families");
  if (config.modes.empty()) throw Error(ErrorKind::ConfigError, "no modes");
  for (FamilyTag tag : config.families) {
    if (tag == FamilyTag::Custom) throw Error(ErrorKind::ConfigError, "sweeps do not support custom states");
    for (double p : config.p) {
      try {
        check_family({tag, p});
      } catch (const Error& e) {
        throw Error(ErrorKind::ConfigError, e.what());
      }
    }
  }
}

std::size_t grid_size(const SweepConfig& config) {
  return config.families.size() * config.modes.size() * config.r.size() * config.s.size() * config.t.size() *
         config.xi.size() * config.tau.size() * config.p.size();
}

namespace {

SweepRecord evaluate_point(const SweepConfig& config, std::size_t index) {
  // Decode the mixed-radix index, p fastest.
  auto take = [&index](const auto& axis) {
    const auto& v = axis[index % axis.size()];
    index /= axis.size();
    return v;
  };
  SweepRecord rec;
  rec.p = take(config.p);
  rec.tau = take(config.tau);
  rec.xi = take(config.xi);
  rec.t = take(config.t);
  rec.s = take(config.s);
  rec.r = take(config.r);
  rec.mode = take(config.modes);
  rec.family = take(config.families);

  const PTParams params{rec.r, rec.s, rec.t, rec.xi, 1.0};
  try {
    const double a = alpha(params);
    rec.alpha = a;
    rec.t1 = rec.t * rec.tau * std::cos(a);
    const Scenario sc{{rec.family, rec.p}, {params, rec.tau}, rec.mode, std::nullopt};
    const Assessment result = assess(sc);
    rec.norm = result.norm;
    rec.signaling = result.signaling;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::AtBranchPoint: rec.status = SweepStatus::BranchPoint; break;
      case ErrorKind::BrokenPTPhase:
      case ErrorKind::DegenerateScale: rec.status = SweepStatus::BrokenPhase; break;
      case ErrorKind::ZeroNorm: rec.status = SweepStatus::ZeroNorm; break;
      default: throw;
    }
    rec.norm.reset();
    rec.signaling.reset();
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> sweep(const SweepConfig& config) {
  check_config(config);
  const std::size_t total = grid_size(config);
  std::vector<SweepRecord> out(total);

  unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (std::size_t i = next.fetch_add(1); i < total && !failed.load(); i = next.fetch_add(1)) {
      try {
        out[i] = evaluate_point(config, i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };

  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ptsig

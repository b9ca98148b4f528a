// ptsig: local PT-symmetric evolution on shared two-qubit states.
//
//   ptsig evolve --s 0.5 --t 1 --xi 0.7 --tau 1.3 --family werner --p 0.8 --mode naive
//   ptsig sweep  --p 0:1:11 --tau 0:3:31 --s 0.5 --family werner --mode naive,cpt --out sweep.csv
//   ptsig verify --seed 7
//
// Exit codes: 0 success, 1 usage/config, 2 domain error, 3 I/O, 4 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ptsig/signaling.hpp"
#include "ptsig/sweep_io.hpp"
#include "ptsig/verify.hpp"

namespace {

using namespace ptsig;

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kIo = 3, kVerifyFailed = 4 };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::ConfigError ? kUsage : kDomain;
}

std::string format_entry(const Complex& z, int precision) {
  std::string out = format_number(z.real(), precision);
  if (z.imag() != 0.0) {
    out += z.imag() < 0.0 ? " - " : " + ";
    out += format_number(std::abs(z.imag()), precision) + "i";
  }
  return out;
}

std::string format_matrix(const Operator2& m, int precision) {
  std::ostringstream os;
  os << "[[" << format_entry(m(0, 0), precision) << ", " << format_entry(m(0, 1), precision) << "], ["
     << format_entry(m(1, 0), precision) << ", " << format_entry(m(1, 1), precision) << "]]";
  return os.str();
}

struct EvolveArgs {
  double r = 0.0, s = 0.0, t = 1.0, xi = 0.0, tau = 1.0;
  double time = 0.0, J = 1.0, hbar = 1.0;
  bool physical_time = false;
  std::string family = "werner";
  double p = 1.0;
  std::string state_file;
  std::string mode = "naive";
  int precision = 6;
};

int run_evolve(const EvolveArgs& args) {
  Scenario sc;
  sc.family = {parse_family(args.family), args.p};
  sc.mode = parse_mode(args.mode);
  if (args.J == 0.0) throw Error(ErrorKind::OutOfRange, "J must be nonzero");
  if (args.physical_time && args.hbar <= 0.0) throw Error(ErrorKind::OutOfRange, "hbar must be positive");
  sc.spec.params = {args.r, args.s, args.t, args.xi, args.J};
  // tau = J tau' / hbar when a physical time is supplied.
  sc.spec.tau = args.physical_time ? args.J * args.time / args.hbar : args.tau;

  if (sc.family.tag == FamilyTag::Custom) {
    if (args.state_file.empty()) throw Error(ErrorKind::ConfigError, "--family custom-file needs --state-file");
    std::ifstream in(args.state_file);
    if (!in) throw IoFailure("cannot open state file '" + args.state_file + "'");
    sc.custom = parse_custom_state(in);
  }

  const double a = validate(sc.spec);
  const Assessment result = assess(sc);
  const int prec = args.precision;

  std::string verdict = "n/a (custom state)";
  if (sc.family.tag != FamilyTag::Custom) {
    if (sc.mode == Mode::Cpt) {
      verdict = "no signaling (unitary evolution)";
    } else {
      verdict = no_signaling_predicate(sc.family, sc.spec) ? "no signaling" : "signaling";
    }
  }

  std::cout << "family      " << to_string(sc.family.tag);
  if (sc.family.tag != FamilyTag::Custom) std::cout << " (p = " << format_number(sc.family.p, prec) << ")";
  std::cout << '\n'
            << "mode        " << to_string(sc.mode) << '\n'
            << "alpha       " << format_number(a, prec) << '\n'
            << "t1          " << format_number(t1(sc.spec), prec) << '\n'
            << "before      " << format_matrix(result.before.matrix(), prec) << '\n'
            << "after       " << format_matrix(result.after.matrix(), prec) << '\n'
            << "norm        " << format_number(result.norm, prec) << '\n'
            << "signaling   " << format_number(result.signaling, prec) << '\n'
            << "predicate   " << verdict << '\n';
  return kOk;
}

struct SweepArgs {
  std::string r = "0", s = "0", t = "1", xi = "0", tau = "1", p = "1";
  std::string families = "werner";
  std::string modes = "naive";
  std::string out;
  int precision = 17;
  std::uint64_t seed = 0;
};

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = text.find(',');
    parts.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

unsigned threads_from_env() {
  const char* env = std::getenv("PTSIG_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw Error(ErrorKind::ConfigError, "PTSIG_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

int run_sweep(const SweepArgs& args) {
  SweepConfig config;
  config.r = parse_grid(args.r);
  config.s = parse_grid(args.s);
  config.t = parse_grid(args.t);
  config.xi = parse_grid(args.xi);
  config.tau = parse_grid(args.tau);
  config.p = parse_grid(args.p);
  config.families.clear();
  for (auto f : split_list(args.families)) config.families.push_back(parse_family(f));
  config.modes.clear();
  for (auto m : split_list(args.modes)) config.modes.push_back(parse_mode(m));
  config.threads = threads_from_env();

  const auto records = sweep(config);

  std::ostringstream csv;
  write_csv(csv, records, args.precision);
  std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure("cannot open '" + args.out + "' for writing");
  file << csv.str();
  file.close();
  if (!file) throw IoFailure("write to '" + args.out + "' failed");

  std::size_t flagged = 0;
  for (const auto& rec : records) flagged += rec.status != SweepStatus::Ok ? 1 : 0;
  std::cerr << "wrote " << records.size() << " rows to " << args.out << " (" << flagged << " flagged)\n";
  return kOk;
}

struct VerifyArgs {
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t samples = VerifyOptions{}.samples;
  std::string fault;
};

int run_verify(const VerifyArgs& args) {
  VerifyOptions options;
  options.seed = args.seed;
  options.samples = args.samples;
  if (!args.fault.empty()) {
    if (args.fault != "c-sign") throw Error(ErrorKind::ConfigError, "unknown fault '" + args.fault + "'");
    options.flip_c_sign = true;
  }
  const auto results = run_verification(options);
  print_report(std::cout, results);
  return all_passed(results) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local PT-symmetric evolution and no-signaling checks", "ptsig"};
  app.require_subcommand(1);

  EvolveArgs ev;
  auto* evolve = app.add_subcommand("evolve", "Evaluate one scenario and report Bob's marginals");
  evolve->add_option("--r", ev.r, "Hamiltonian parameter r");
  evolve->add_option("--s", ev.s, "Hamiltonian parameter s (s^2 <= t^2)");
  evolve->add_option("--t", ev.t, "Hamiltonian parameter t");
  evolve->add_option("--xi", ev.xi, "Hamiltonian angle xi");
  auto* tau_opt = evolve->add_option("--tau", ev.tau, "Dimensionless time tau = J tau' / hbar");
  auto* time_opt = evolve->add_option("--time", ev.time, "Physical time tau' (uses --J and --hbar)");
  time_opt->excludes(tau_opt);
  evolve->callback([&ev, time_opt] { ev.physical_time = time_opt->count() > 0; });
  evolve->add_option("--J", ev.J, "Energy scale J (nonzero)");
  evolve->add_option("--hbar", ev.hbar, "Value of hbar in the units of J * tau'");
  evolve->add_option("--family", ev.family, "werner | classical | maxent | custom-file")
      ->check(CLI::IsMember({"werner", "classical", "maxent", "custom-file", "custom"}));
  evolve->add_option("--p", ev.p, "Family parameter p");
  evolve->add_option("--state-file", ev.state_file, "Custom 4x4 state: 16 lines of 're im'");
  evolve->add_option("--mode", ev.mode, "naive | cpt")->check(CLI::IsMember({"naive", "cpt"}));
  evolve->add_option("--precision", ev.precision, "Significant digits")->check(CLI::Range(6, 17));

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a parameter grid and write CSV");
  sweep_cmd->add_option("--r", sw.r, "Grid: start:stop:count or a,b,c");
  sweep_cmd->add_option("--s", sw.s, "Grid for s");
  sweep_cmd->add_option("--t", sw.t, "Grid for t");
  sweep_cmd->add_option("--xi", sw.xi, "Grid for xi");
  sweep_cmd->add_option("--tau", sw.tau, "Grid for tau");
  sweep_cmd->add_option("--p", sw.p, "Grid for the family parameter p");
  sweep_cmd->add_option("--family", sw.families, "Comma list of werner, classical, maxent");
  sweep_cmd->add_option("--mode", sw.modes, "Comma list of naive, cpt");
  sweep_cmd->add_option("--out", sw.out, "Output CSV path")->required();
  sweep_cmd->add_option("--precision", sw.precision, "Significant digits")->check(CLI::Range(6, 17));
  sweep_cmd->add_option("--seed", sw.seed, "Seed (sweeps are deterministic; accepted for uniformity)");

  VerifyArgs vf;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suites");
  verify_cmd->add_option("--seed", vf.seed, "Seed for randomized suites");
  verify_cmd->add_option("--samples", vf.samples, "Random samples per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--inject-fault", vf.fault, "Test hook (c-sign)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*evolve) return run_evolve(ev);
    if (*sweep_cmd) return run_sweep(sw);
    if (*verify_cmd) return run_verify(vf);
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}

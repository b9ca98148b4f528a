#include "ptsig/sweep_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

namespace ptsig {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
    throw Error(ErrorKind::ConfigError, "not a number: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::ConfigError, "empty grid");

  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw Error(ErrorKind::ConfigError, "range grid must be start:stop:count");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const auto count_text = trim(parts[2]);
    long count = 0;
    const auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() || count < 1)
      throw Error(ErrorKind::ConfigError, "grid count must be a positive integer");
    if (count == 1 && start != stop) throw Error(ErrorKind::ConfigError, "count 1 requires start == stop");

    std::vector<double> grid(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k)
      grid[static_cast<std::size_t>(k)] = count == 1 ? start : start + (stop - start) * double(k) / double(count - 1);
    grid.back() = stop;
    return grid;
  }

  std::vector<double> grid;
  for (auto part : split(text, ',')) grid.push_back(parse_double(part));
  return grid;
}

FamilyTag parse_family(std::string_view text) {
  if (text == "werner") return FamilyTag::Werner;
  if (text == "classical") return FamilyTag::ClassicalCorrelated;
  if (text == "maxent") return FamilyTag::MaxEntangled;
  if (text == "custom" || text == "custom-file") return FamilyTag::Custom;
  throw Error(ErrorKind::ConfigError, "unknown family '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view text) {
  if (text == "naive") return Mode::Naive;
  if (text == "cpt") return Mode::Cpt;
  throw Error(ErrorKind::ConfigError, "unknown mode '" + std::string(text) + "'");
}

std::string format_number(double value, int precision) {
  if (value == 0.0) value = 0.0;  // folds -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
  if (ec != std::errc()) throw Error(ErrorKind::ConfigError, "number formatting failed");
  return std::string(buf, ptr);
}

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records, int precision) {
  const auto num = [precision](double v) { return format_number(v, precision); };
  const auto opt = [&num](const std::optional<double>& v) { return v ? num(*v) : std::string(); };
  os << kCsvHeader << '\n';
  for (const auto& rec : records) {
    os << num(rec.r) << ',' << num(rec.s) << ',' << num(rec.t) << ',' << num(rec.xi) << ',' << num(rec.tau) << ','
       << opt(rec.alpha) << ',' << opt(rec.t1) << ',' << to_string(rec.family) << ',' << num(rec.p) << ','
       << to_string(rec.mode) << ',' << opt(rec.norm) << ',' << opt(rec.signaling) << ',' << to_string(rec.status)
       << '\n';
  }
}

BipartiteDensity parse_custom_state(std::istream& is) {
  Operator4 m;
  for (int k = 0; k < 16; ++k) {
    double re = 0.0, im = 0.0;
    if (!(is >> re >> im)) throw Error(ErrorKind::InvalidState, "expected 16 're im' pairs");
    m(k / 4, k % 4) = Complex(re, im);
  }
  std::string extra;
  if (is >> extra) throw Error(ErrorKind::InvalidState, "trailing data after 16 entries");

  const auto violations = validate<4>(m, 1e-9);
  if (!violations.empty()) throw Error(ErrorKind::InvalidState, describe(violations.front()));
  Operator4 herm = (m + m.adjoint()) / 2.0;
  herm /= std::real(herm.trace());
  return BipartiteDensity::from_matrix(herm, 1e-9);
}

BipartiteDensity read_custom_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ConfigError, "cannot open state file '" + path + "'");
  return parse_custom_state(in);
}

}  // namespace ptsig

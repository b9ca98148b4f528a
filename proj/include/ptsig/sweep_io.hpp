#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ptsig/signaling.hpp"

namespace ptsig {

/// Exact CSV header written by write_csv.
inline constexpr std::string_view kCsvHeader = "r,s,t,xi,tau,alpha,t1,family,p,mode,norm,signaling,status";

/// Parses "start:stop:count" (inclusive linspace) or a comma separated list.
/// Throws ConfigError on malformed input.
std::vector<double> parse_grid(std::string_view text);

FamilyTag parse_family(std::string_view text);
Mode parse_mode(std::string_view text);

/// Decimal rendering with `precision` significant digits, locale independent.
/// -0 is printed as 0.
std::string format_number(double value, int precision);

/// Header plus one row per record, in the order given.
void write_csv(std::ostream& os, const std::vector<SweepRecord>& records, int precision);

/// Custom bipartite state: 16 whitespace separated "re im" pairs, row-major
/// 4x4. Rejected (InvalidState) unless it is a density matrix within 1e-9.
BipartiteDensity parse_custom_state(std::istream& is);
BipartiteDensity read_custom_state(const std::string& path);

}  // namespace ptsig

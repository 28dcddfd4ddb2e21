#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "henon/dist.hpp"
#include "henon/escape.hpp"

namespace henon {

struct EscapeSummary {
  long escaped = 0;
  long bounded = 0;
  long uncertain = 0;
  long total = 0;

  double escaped_fraction() const { return total ? static_cast<double>(escaped) / total : 0.0; }
  double bounded_fraction() const { return total ? static_cast<double>(bounded) / total : 0.0; }
  double uncertain_fraction() const { return total ? static_cast<double>(uncertain) / total : 0.0; }
};

/// Classifies every (grid point, sequence) pair; pair (p, s) uses
/// derive_stream(seed, p * sequences_per_point + s).
EscapeSummary escape_stats(const MapDistribution& dist, const std::vector<C2Point>& grid, int sequences_per_point,
                           int max_iter, SequenceSeed seed);

/// Pixel centres of a slice, row by row.
std::vector<C2Point> slice_points(const SliceSpec& spec);

struct SelftestResult {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
};

SelftestResult run_selftest(std::ostream& log);

/// Exit codes: 0 success, 2 configuration error, 3 computational error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace henon

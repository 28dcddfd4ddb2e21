#pragma once

#include <utility>
#include <vector>

#include "henon/minsets.hpp"

namespace henon {

struct SetSummary {
  int period = 1;
  std::size_t cloud_size = 0;
  double capture_radius = 0.0;
  double contraction = 0.0;
  bool certified = false;
};

struct SweepRecord {
  double t = 0.0;
  double radius = 0.0;
  int minset_count = 1;
  int finite_minsets = 0;
  bool all_attracting = true;
  /// Largest unresolved basin mass over the probe grid.
  double unresolved_mass = 0.0;
  bool mean_stable = true;
  std::vector<SetSummary> descriptors;
  std::vector<DiscoveryIssue> issues;
};

struct SweepReport {
  std::vector<double> t_grid;
  std::vector<SweepRecord> per_t;
  /// Index pairs (k, l), k < l, with finite_minsets rising from t_k to t_l.
  std::vector<std::pair<int, int>> monotonicity_violations;
};

struct ScanParams {
  DiscoveryParams discovery;
  std::vector<C2Point> grid;
  /// Points for the unresolved-mass check of the mean-stability proxy.
  std::vector<C2Point> probe_points;
  int tl_samples = 100;
  int tl_max_iter = 2000;
};

SweepReport scan_family(const NoiseFamily& fam, const std::vector<double>& t_grid, const ScanParams& sp,
                        SequenceSeed seed);

/// Grid intervals (t_k, t_{k+1}) across which minset_count changes.
std::vector<std::pair<double, double>> locate_bifurcations(const SweepReport& report);

}  // namespace henon

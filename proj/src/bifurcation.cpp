#include "henon/bifurcation.hpp"

#include <algorithm>

namespace henon {

SweepReport scan_family(const NoiseFamily& fam, const std::vector<double>& t_grid, const ScanParams& sp,
                        SequenceSeed seed) {
  if (t_grid.empty()) throw LabError(ErrorCode::invalid_argument, "t_grid is empty");
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) throw LabError(ErrorCode::invalid_argument, "t_grid must be sorted");
  if (t_grid.front() < 0.0 || t_grid.back() > 1.0) throw LabError(ErrorCode::invalid_argument, "t_grid must lie in [0, 1]");

  SweepReport rep;
  rep.t_grid = t_grid;
  for (double t : t_grid) {
    const MapDistribution dist = family_at(fam, t);
    const FiltrationParams params = dist.filtration();
    // The same seed at every t keeps the sweep on common random numbers.
    const DiscoveryResult found = discover_minimal_sets(dist, params, sp.grid, sp.discovery, seed);
    SweepRecord rec;
    rec.t = t;
    rec.radius = fam.radius_at(t);
    rec.minset_count = static_cast<int>(found.sets.size());
    rec.finite_minsets = static_cast<int>(found.finite_count());
    rec.issues = found.issues;
    for (const auto& L : found.sets) {
      if (L.is_infinity()) continue;
      rec.descriptors.push_back({L.period, L.cloud.size(), L.capture_radius, L.contraction, L.certified});
      rec.all_attracting = rec.all_attracting && L.certified;
    }
    if (rec.finite_minsets > 0 && !sp.probe_points.empty()) {
      const CaptureMap cap(found.sets, params.R);
      for (std::size_t k = 0; k < sp.probe_points.size(); ++k) {
        const auto out = basin_outcomes(dist, cap, sp.probe_points[k], sp.tl_samples, sp.tl_max_iter,
                                        derive_stream(seed, 0x7E57ULL + k));
        const BasinEstimate est = tally_outcomes(found.sets, cap, out);
        rec.unresolved_mass = std::max(rec.unresolved_mass, est.unresolved);
      }
    }
    rec.mean_stable = rec.all_attracting && rec.unresolved_mass < 0.01;
    rep.per_t.push_back(std::move(rec));
  }
  for (std::size_t k = 0; k < rep.per_t.size(); ++k) {
    for (std::size_t l = k + 1; l < rep.per_t.size(); ++l) {
      if (rep.per_t[l].finite_minsets > rep.per_t[k].finite_minsets) {
        rep.monotonicity_violations.push_back({static_cast<int>(k), static_cast<int>(l)});
      }
    }
  }
  return rep;
}

std::vector<std::pair<double, double>> locate_bifurcations(const SweepReport& report) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k + 1 < report.per_t.size(); ++k) {
    if (report.per_t[k].minset_count != report.per_t[k + 1].minset_count) {
      out.push_back({report.t_grid[k], report.t_grid[k + 1]});
    }
  }
  return out;
}

}  // namespace henon

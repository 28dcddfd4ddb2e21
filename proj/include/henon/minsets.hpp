#pragma once

#include <memory>
#include <string>
#include <vector>

#include "henon/cloud_index.hpp"
#include "henon/sequence.hpp"

namespace henon {

/// Descriptor id of the minimal set {[0:1:0]} at infinity.
inline constexpr int kInfinityId = -1;

struct MinimalSetDescriptor {
  int id = kInfinityId;
  std::vector<C2Point> cloud;
  int period = 1;
  /// Cyclic classes of cloud indices; parts[j] is mapped into parts[(j+1) % period].
  std::vector<std::vector<int>> parts;
  double capture_radius = 0.0;
  double contraction = 0.0;
  bool certified = false;
  /// False when saturation hit its round or size limit.
  bool converged = true;

  bool is_infinity() const { return id == kInfinityId; }
};

struct DiscoveryParams {
  int burn_in = 1000;
  int n_record = 200;
  double cluster_eps = 1e-2;
  /// Ball-noise support is represented by this many sampled maps.
  int support_samples = 64;
  int max_rounds = 50;
  std::size_t max_cloud = 200000;
  int certify_probes = 16;
  int certify_steps = 100;
};

struct DiscoveryIssue {
  ErrorCode code;
  std::string message;
};

struct DiscoveryResult {
  /// Finite sets first (ids 0, 1, ...), INFINITY last.
  std::vector<MinimalSetDescriptor> sets;
  std::vector<DiscoveryIssue> issues;
  int grid_escaped = 0;
  int grid_bounded = 0;

  std::size_t finite_count() const { return sets.empty() ? 0 : sets.size() - 1; }
};

DiscoveryResult discover_minimal_sets(const MapDistribution& dist, const FiltrationParams& params,
                                      const std::vector<C2Point>& grid, const DiscoveryParams& dp, SequenceSeed seed);

/// Runs discovery with cluster_eps, eps/2, ... until two successive finite
/// counts agree (at most `max_halvings` halvings); returns the coarser result.
DiscoveryResult discover_with_refinement(const MapDistribution& dist, const FiltrationParams& params,
                                         const std::vector<C2Point>& grid, const DiscoveryParams& dp,
                                         SequenceSeed seed, int max_halvings = 2);

/// Period of a strongly connected digraph: gcd of its cycle lengths.
/// Returns 0 when the graph is not strongly connected. `level` receives the
/// BFS level of each node modulo the period.
int digraph_period(const std::vector<std::vector<int>>& adj, std::vector<int>* level = nullptr);

/// Rebuilds the sub-cluster digraph of L at cluster_eps, sets L.period and
/// L.parts, and returns the period. Throws NOT_MINIMAL when the digraph is not
/// strongly connected or leaks.
int detect_period(const MapDistribution& dist, MinimalSetDescriptor& L, double cluster_eps, int support_samples,
                  SequenceSeed seed);

struct ContractionReport {
  double ratio = 0.0;
  bool certified = false;
  int pairs_used = 0;
};

ContractionReport certify_attracting(const MapDistribution& dist, const MinimalSetDescriptor& L, int probes, int n,
                                     SequenceSeed seed);

/// Lookup of capture neighbourhoods {w : dist(w, cloud) < capture_radius}.
class CaptureMap {
 public:
  CaptureMap(const std::vector<MinimalSetDescriptor>& sets, double R);
  /// Index into the finite sets containing w, -1 if none; throws
  /// AMBIGUOUS_CAPTURE when two neighbourhoods claim w.
  int locate(const C2Point& w) const;
  /// Distance from w to the cloud of finite set `k`, capped at its capture radius.
  double distance_to(int k, const C2Point& w) const;
  const std::vector<int>& ids() const { return ids_; }
  double R() const { return R_; }

 private:
  std::vector<int> ids_;
  std::vector<double> radii_;
  std::vector<std::unique_ptr<CloudIndex>> index_;
  double R_;
};

/// Steps an orbit must spend inside one capture neighbourhood to be assigned.
inline constexpr int kCaptureDwell = 20;

/// Outcome of one orbit: a finite-set position in CaptureMap::ids(),
/// kOutcomeInfinity, or kOutcomeUnresolved.
inline constexpr int kOutcomeInfinity = -1;
inline constexpr int kOutcomeUnresolved = -2;

int basin_outcome(const MapSequence& seq, const C2Point& z, const CaptureMap& cap, int max_iter);

struct BasinEstimate {
  /// Descriptor ids in the order of the input sets (INFINITY included).
  std::vector<int> ids;
  std::vector<long> counts;
  std::vector<double> probabilities;
  long samples = 0;
  long unresolved_count = 0;
  double unresolved = 0.0;

  double probability_of(int id) const;
};

/// Per-sample outcomes, sample s driven by derive_stream(seed, s).
std::vector<int> basin_outcomes(const MapDistribution& dist, const CaptureMap& cap, const C2Point& z, int samples,
                                int max_iter, SequenceSeed seed);

BasinEstimate tally_outcomes(const std::vector<MinimalSetDescriptor>& sets, const CaptureMap& cap,
                             const std::vector<int>& outcomes);

BasinEstimate estimate_TL(const MapDistribution& dist, const std::vector<MinimalSetDescriptor>& minsets,
                          const C2Point& z, int samples, int max_iter, SequenceSeed seed);

}  // namespace henon

#pragma once

#include "henon/harness.hpp"
#include "henon/lyapunov.hpp"
#include "henon/minsets.hpp"

// Single-threaded loops over the same per-item kernels as the OpenMP
// versions. Used to check bit-identity and as the benchmark baseline.
namespace henon::serial {

Raster raster_slice(const MapSequence& seq, const SliceSpec& spec, const FiltrationParams& params, int max_iter,
                    double tol);

EscapeSummary escape_stats(const MapDistribution& dist, const std::vector<C2Point>& grid, int sequences_per_point,
                           int max_iter, SequenceSeed seed);

LyapunovReport lyapunov_statistics(const MapDistribution& dist, const C2Point& z, int samples, int n,
                                   SequenceSeed seed);

std::vector<int> basin_outcomes(const MapDistribution& dist, const CaptureMap& cap, const C2Point& z, int samples,
                                int max_iter, SequenceSeed seed);

}  // namespace henon::serial

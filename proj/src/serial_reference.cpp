#include "henon/serial.hpp"

namespace henon::serial {

Raster raster_slice(const MapSequence& seq, const SliceSpec& spec, const FiltrationParams& params, int max_iter,
                    double tol) {
  spec.validate();
  Raster r;
  r.width = r.height = spec.resolution;
  r.cells.resize(static_cast<size_t>(r.width) * r.height);
  for (int j = 0; j < r.height; ++j) {
    for (int i = 0; i < r.width; ++i) r.at(i, j) = pixel_kernel(seq, spec.pixel(i, j), params, max_iter, tol);
  }
  return r;
}

EscapeSummary escape_stats(const MapDistribution& dist, const std::vector<C2Point>& grid, int sequences_per_point,
                           int max_iter, SequenceSeed seed) {
  if (sequences_per_point < 1) throw LabError(ErrorCode::invalid_argument, "sequences_per_point must be >= 1");
  const auto shared = std::make_shared<const MapDistribution>(dist);
  const FiltrationParams params = dist.filtration();
  EscapeSummary s;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    for (int q = 0; q < sequences_per_point; ++q) {
      const std::uint64_t k = p * static_cast<std::uint64_t>(sequences_per_point) + static_cast<std::uint64_t>(q);
      const Verdict v = classify_orbit(MapSequence::sampled(shared, derive_stream(seed, k)), grid[p], params, max_iter).status;
      if (v == Verdict::escaped) ++s.escaped;
      else if (v == Verdict::bounded) ++s.bounded;
      else ++s.uncertain;
      ++s.total;
    }
  }
  return s;
}

LyapunovReport lyapunov_statistics(const MapDistribution& dist, const C2Point& z, int samples, int n,
                                   SequenceSeed seed) {
  if (samples < 10) throw LabError(ErrorCode::invalid_argument, "lyapunov statistics need samples >= 10");
  if (n < 100) throw LabError(ErrorCode::invalid_argument, "lyapunov runs need n >= 100");
  const auto shared = std::make_shared<const MapDistribution>(dist);
  const FiltrationParams params = dist.filtration();
  std::vector<LyapunovRun> runs;
  for (int i = 0; i < samples; ++i) runs.push_back(lyapunov_run(shared, z, n, params, seed, static_cast<std::uint64_t>(i)));
  return summarize_runs(std::move(runs), n);
}

std::vector<int> basin_outcomes(const MapDistribution& dist, const CaptureMap& cap, const C2Point& z, int samples,
                                int max_iter, SequenceSeed seed) {
  if (samples < 1) throw LabError(ErrorCode::invalid_argument, "samples must be positive");
  if (max_iter < 1) throw LabError(ErrorCode::invalid_argument, "max_iter must be positive");
  const auto shared = std::make_shared<const MapDistribution>(dist);
  std::vector<int> out;
  for (int s = 0; s < samples; ++s) {
    out.push_back(basin_outcome(MapSequence::sampled(shared, derive_stream(seed, static_cast<std::uint64_t>(s))), z,
                                cap, max_iter));
  }
  return out;
}

}  // namespace henon::serial

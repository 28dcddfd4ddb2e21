#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "henon/serial.hpp"

using namespace henon;

namespace {

double seconds(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-22s serial %8.3f s   openmp %8.3f s   speedup %5.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  const HenonMap f(0.0, 0.3, Polynomial{1.0, 0.0, -1.0});
  const auto dist = MapDistribution::ball(f, 0.05);
  const FiltrationParams params = dist.filtration();
  const SequenceSeed seed{42, 0};

  SliceSpec spec;
  spec.extent = 2.0;
  spec.resolution = 256;
  const MapSequence seq = MapSequence::sampled(dist, seed);
  report("raster 256x256", seconds([&] { serial::raster_slice(seq, spec, params, 2000, 1e-6); }),
         seconds([&] { raster_slice(seq, spec, params, 2000, 1e-6); }));

  SliceSpec coarse = spec;
  coarse.resolution = 50;
  const auto grid = slice_points(coarse);
  report("escape census", seconds([&] { serial::escape_stats(dist, grid, 4, 5000, seed); }),
         seconds([&] { escape_stats(dist, grid, 4, 5000, seed); }));

  const auto attracting = MapDistribution::ball(HenonMap(0.0, 0.1, Polynomial{1.0, 0.0, 0.0}), 0.05);
  report("lyapunov 200 x 1e4", seconds([&] { serial::lyapunov_statistics(attracting, {}, 200, 10000, seed); }),
         seconds([&] { lyapunov_statistics(attracting, {}, 200, 10000, seed); }));
  return 0;
}

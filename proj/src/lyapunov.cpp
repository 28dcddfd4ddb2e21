#include "henon/lyapunov.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace henon {

LyapunovRun max_lyapunov_single(const MapSequence& seq, const C2Point& z, int n, const FiltrationParams& params,
                                SequenceSeed vector_seed) {
  if (n < 100) throw LabError(ErrorCode::invalid_argument, "lyapunov runs need n >= 100");
  CounterRng rng(vector_seed, 0, RngDomain::start_vector);
  const double theta = std::numbers::pi * rng.uniform();
  const double phase = 2.0 * std::numbers::pi * rng.uniform();
  Complex v1(std::cos(theta));
  Complex v2 = std::polar(std::sin(theta), phase);

  const double r_big = 10.0 * params.R;
  LyapunovRun run;
  C2Point w = z;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    if (!in_box(w, r_big)) {
      run.escaped = true;
      run.escape_step = k;
      return run;
    }
    const HenonMap f = seq.at(static_cast<std::uint64_t>(k));
    // J = [[0, 1], [-delta, p'(y)]]
    const Complex u1 = v2;
    const Complex u2 = -f.delta() * v1 + f.poly().derivative(w.y) * v2;
    const double len = std::hypot(std::abs(u1), std::abs(u2));
    if (!(len >= 1e-300)) throw LabError(ErrorCode::degenerate, "tangent vector collapsed");
    acc += std::log(len);
    v1 = u1 / len;
    v2 = u2 / len;
    w = f.apply(w);
  }
  if (!in_box(w, r_big)) {
    run.escaped = true;
    run.escape_step = n;
    return run;
  }
  run.exponent = acc / n;
  return run;
}

LyapunovRun lyapunov_run(const std::shared_ptr<const MapDistribution>& dist, const C2Point& z, int n,
                         const FiltrationParams& params, SequenceSeed seed, std::uint64_t i) {
  const SequenceSeed s = derive_stream(seed, i);
  LyapunovRun run = max_lyapunov_single(MapSequence::sampled(dist, s), z, n, params, s);
  run.stream = i;
  return run;
}

LyapunovReport summarize_runs(std::vector<LyapunovRun> runs, int n) {
  LyapunovReport rep;
  rep.n_steps = n;
  rep.samples = static_cast<int>(runs.size());
  double sum = 0.0;
  int kept = 0;
  for (const auto& r : runs) {
    if (r.escaped) continue;
    sum += r.exponent;
    ++kept;
  }
  rep.escaped_fraction = runs.empty() ? 0.0 : 1.0 - static_cast<double>(kept) / runs.size();
  rep.runs = std::move(runs);
  if (kept == 0) {
    rep.escaped_fraction = 1.0;
    throw AllEscaped(std::move(rep));
  }
  rep.exponent = sum / kept;
  if (kept > 1) {
    double ss = 0.0;
    for (const auto& r : rep.runs) {
      if (!r.escaped) ss += (r.exponent - rep.exponent) * (r.exponent - rep.exponent);
    }
    rep.ci95_halfwidth = 1.96 * std::sqrt(ss / (kept - 1)) / std::sqrt(static_cast<double>(kept));
  } else {
    rep.ci95_halfwidth = std::numeric_limits<double>::infinity();
  }
  return rep;
}

LyapunovReport lyapunov_statistics(const MapDistribution& dist, const C2Point& z, int samples, int n,
                                   SequenceSeed seed) {
  if (samples < 10) throw LabError(ErrorCode::invalid_argument, "lyapunov statistics need samples >= 10");
  if (n < 100) throw LabError(ErrorCode::invalid_argument, "lyapunov runs need n >= 100");
  const auto shared = std::make_shared<const MapDistribution>(dist);
  const FiltrationParams params = dist.filtration();
  std::vector<LyapunovRun> runs(static_cast<size_t>(samples));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < samples; ++i) runs[i] = lyapunov_run(shared, z, n, params, seed, static_cast<std::uint64_t>(i));
  return summarize_runs(std::move(runs), n);
}

LyapunovReport backward_lyapunov_statistics(const MapDistribution& dist, const C2Point& z, int samples, int n,
                                            SequenceSeed seed) {
  return lyapunov_statistics(inverse_distribution(dist), swap(z), samples, n, seed);
}

}  // namespace henon

#pragma once

#include <vector>

#include "henon/sequence.hpp"

namespace henon {

struct LyapunovRun {
  std::uint64_t stream = 0;
  bool escaped = false;
  /// Mean of log |J_k v_k| over the run (nats per step); undefined when escaped.
  double exponent = 0.0;
  /// Step at which the orbit left D_{10R}; -1 if it never did.
  int escape_step = -1;
};

struct LyapunovReport {
  double exponent = 0.0;
  int n_steps = 0;
  int samples = 0;
  double ci95_halfwidth = 0.0;
  double escaped_fraction = 0.0;
  std::vector<LyapunovRun> runs;
};

class AllEscaped : public LabError {
 public:
  explicit AllEscaped(LyapunovReport report)
      : LabError(ErrorCode::all_escaped, "every run left the affine chart"), report_(std::move(report)) {}
  const LyapunovReport& report() const { return report_; }

 private:
  LyapunovReport report_;
};

/// Renormalized tangent-vector iteration along one orbit. The start vector
/// (cos t, e^{i s} sin t) is drawn from `vector_seed`.
LyapunovRun max_lyapunov_single(const MapSequence& seq, const C2Point& z, int n, const FiltrationParams& params,
                                SequenceSeed vector_seed);

/// Run `i` uses the sequence and start vector of derive_stream(seed, i).
LyapunovRun lyapunov_run(const std::shared_ptr<const MapDistribution>& dist, const C2Point& z, int n,
                         const FiltrationParams& params, SequenceSeed seed, std::uint64_t i);

/// Mean over non-escaped runs, in run order; throws AllEscaped when none remain.
LyapunovReport summarize_runs(std::vector<LyapunovRun> runs, int n);

LyapunovReport lyapunov_statistics(const MapDistribution& dist, const C2Point& z, int samples, int n,
                                   SequenceSeed seed);

/// Forward statistics of inverse_distribution(dist) at s(z).
LyapunovReport backward_lyapunov_statistics(const MapDistribution& dist, const C2Point& z, int samples, int n,
                                            SequenceSeed seed);

}  // namespace henon

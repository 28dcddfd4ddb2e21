#pragma once

#include <functional>
#include <string>
#include <vector>

#include "henon/minsets.hpp"

namespace henon {

struct TestFunction {
  std::function<double(const C2Point&)> eval;
  std::string description;
  double bound = 1.0;
  /// Value used once an orbit leaves the floating-point range.
  double at_infinity = 0.0;

  double operator()(const C2Point& z) const { return is_finite(z) ? eval(z) : at_infinity; }
};

TestFunction constant_function(double c);

/// phi_L(w) = (1 - s / w0)^2 for s = dist(w, cloud) < w0 = capture_radius / 2,
/// and 0 beyond. Equals 1 on L, vanishes on the other capture neighbourhoods.
TestFunction phi_L(const MinimalSetDescriptor& L);

struct MEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Exact weighted sum for finite distributions, Monte Carlo otherwise.
MEstimate apply_M(const MapDistribution& dist, const TestFunction& phi, const C2Point& z, int mc_samples,
                  SequenceSeed seed);

struct IterateOptions {
  double budget = 1e6;
  int mc_samples = 100000;
  SequenceSeed seed{};
};

/// M^n phi(z): exact tree sum when m^n <= budget, else Monte Carlo stratified
/// by the first map.
MEstimate iterate_M(const MapDistribution& dist, const TestFunction& phi, const C2Point& z, int n,
                    const IterateOptions& opt = {});

struct RateFit {
  double lambda_hat = 0.0;
  double slope = 0.0;
  double r_squared = 0.0;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<int> ns;
  std::vector<double> sup_errors;
  double floor = 0.0;
  bool rate_reported = false;
};

struct RateOptions {
  int tl_samples = 2000;
  int tl_max_iter = 10000;
  IterateOptions iterate;
};

RateFit fit_convergence_rate(const MapDistribution& dist, const std::vector<MinimalSetDescriptor>& minsets, int L_id,
                             const std::vector<C2Point>& test_points, int n_lo, int n_hi, SequenceSeed seed,
                             const RateOptions& opt = {});

struct DerivativeEstimate {
  double value = 0.0;
  double error = 0.0;
  int terms = 0;
  std::size_t evaluations = 0;
};

struct NeumannOptions {
  double eps_trunc = 1e-3;
  int tl_samples = 1000;
  int tl_max_iter = 10000;
  int max_terms = 200;
};

/// d T_L / d b_i along e_i - e_{m-1} (i is 0-based, the last map is the
/// reference) as the series sum_n M^n zeta with
/// zeta(w) = T_L(h_i w) - T_L(h_{m-1} w).
DerivativeEstimate weight_derivative_TL(const MapDistribution& dist, const std::vector<MinimalSetDescriptor>& minsets,
                                        int L_id, int i, const C2Point& z, SequenceSeed seed,
                                        const NeumannOptions& opt = {});

/// Central difference of estimate_TL at weights b +- h (e_i - e_{m-1}) under
/// common random numbers.
DerivativeEstimate fd_derivative_TL(const MapDistribution& dist, const std::vector<MinimalSetDescriptor>& minsets,
                                    int L_id, int i, const C2Point& z, double h, int samples, int max_iter,
                                    SequenceSeed seed);

}  // namespace henon

#include "henon/transition.hpp"

#include <cmath>
#include <memory>
#include <unordered_map>

namespace henon {

TestFunction constant_function(double c) {
  return {[c](const C2Point&) { return c; }, "constant " + std::to_string(c), std::abs(c), c};
}

TestFunction phi_L(const MinimalSetDescriptor& L) {
  if (L.is_infinity() || L.cloud.empty()) throw LabError(ErrorCode::invalid_argument, "phi_L needs a finite set");
  if (!(L.capture_radius > 0.0)) throw LabError(ErrorCode::invalid_argument, "capture radius must be positive");
  const double w0 = 0.5 * L.capture_radius;
  auto idx = std::make_shared<CloudIndex>(w0);
  for (const auto& p : L.cloud) idx->add(p);
  auto eval = [idx, w0](const C2Point& w) {
    const int j = idx->nearest_within(w, w0);
    if (j < 0) return 0.0;
    const double t = 1.0 - distance(w, (*idx)[static_cast<size_t>(j)]) / w0;
    return t * t;
  };
  return {eval, "ramp around minimal set " + std::to_string(L.id), 1.0, 0.0};
}

namespace {

struct Moments {
  double sum = 0.0;
  double sum2 = 0.0;
  long n = 0;

  void add(double v) {
    sum += v;
    sum2 += v * v;
    ++n;
  }
  double mean() const { return sum / n; }
  double variance() const {
    if (n < 2) return 0.0;
    const double m = mean();
    return std::max(0.0, (sum2 - n * m * m) / (n - 1));
  }
};

double tree_sum(const FiniteSupport& fs, const TestFunction& phi, const C2Point& z, int depth) {
  if (depth == 0 || !is_finite(z)) return phi(z);
  double acc = 0.0;
  for (std::size_t j = 0; j < fs.maps.size(); ++j) acc += fs.weights[j] * tree_sum(fs, phi, fs.maps[j].apply(z), depth - 1);
  return acc;
}

C2Point run_orbit(const MapSequence& seq, C2Point w, int from, int to) {
  for (int k = from; k < to && is_finite(w); ++k) w = seq.at(static_cast<std::uint64_t>(k)).apply(w);
  return w;
}

}  // namespace

MEstimate apply_M(const MapDistribution& dist, const TestFunction& phi, const C2Point& z, int mc_samples,
                  SequenceSeed seed) {
  if (dist.kind() == DistKind::finite) {
    const auto& fs = dist.finite_support();
    double acc = 0.0;
    for (std::size_t j = 0; j < fs.maps.size(); ++j) acc += fs.weights[j] * phi(fs.maps[j].apply(z));
    return {acc, 0.0};
  }
  if (mc_samples < 2) throw LabError(ErrorCode::invalid_argument, "mc_samples must be >= 2");
  Moments m;
  for (int s = 0; s < mc_samples; ++s) m.add(phi(sample_map(dist, seed, static_cast<std::uint64_t>(s)).apply(z)));
  return {m.mean(), std::sqrt(m.variance() / m.n)};
}

MEstimate iterate_M(const MapDistribution& dist, const TestFunction& phi, const C2Point& z, int n,
                    const IterateOptions& opt) {
  if (n < 0) throw LabError(ErrorCode::invalid_argument, "n must be >= 0");
  if (n == 0) return {phi(z), 0.0};
  if (dist.kind() == DistKind::finite) {
    const auto& fs = dist.finite_support();
    const double log_size = n * std::log(static_cast<double>(fs.maps.size()));
    if (log_size <= std::log(opt.budget) + 1e-12) return {tree_sum(fs, phi, z, n), 0.0};
  }
  if (opt.mc_samples < 2) throw LabError(ErrorCode::invalid_argument, "mc_samples must be >= 2");
  const auto shared = std::make_shared<const MapDistribution>(dist);

  if (dist.kind() != DistKind::finite) {
    std::vector<double> vals(static_cast<size_t>(opt.mc_samples));
#pragma omp parallel for schedule(static)
    for (int s = 0; s < opt.mc_samples; ++s) {
      const MapSequence seq = MapSequence::sampled(shared, derive_stream(opt.seed, static_cast<std::uint64_t>(s)));
      vals[s] = phi(run_orbit(seq, z, 0, n));
    }
    Moments m;
    for (double v : vals) m.add(v);
    return {m.mean(), std::sqrt(m.variance() / m.n)};
  }

  // Stratify on the first map; later maps come from per-sample streams.
  const auto& fs = dist.finite_support();
  double value = 0.0, var = 0.0;
  for (std::size_t j = 0; j < fs.maps.size(); ++j) {
    const int nj = std::max(2, static_cast<int>(std::lround(opt.mc_samples * fs.weights[j])));
    const SequenceSeed stratum = derive_stream(opt.seed, j);
    const C2Point w1 = fs.maps[j].apply(z);
    std::vector<double> vals(static_cast<size_t>(nj));
#pragma omp parallel for schedule(static)
    for (int s = 0; s < nj; ++s) {
      const MapSequence seq = MapSequence::sampled(shared, derive_stream(stratum, static_cast<std::uint64_t>(s)));
      vals[s] = phi(run_orbit(seq, w1, 1, n));
    }
    Moments m;
    for (double v : vals) m.add(v);
    value += fs.weights[j] * m.mean();
    var += fs.weights[j] * fs.weights[j] * m.variance() / m.n;
  }
  return {value, std::sqrt(var)};
}

namespace {

const MinimalSetDescriptor& find_set(const std::vector<MinimalSetDescriptor>& sets, int id) {
  for (const auto& L : sets) {
    if (L.id == id) return L;
  }
  throw LabError(ErrorCode::invalid_argument, "no minimal set with id " + std::to_string(id));
}

int capture_slot(const CaptureMap& cap, int id) {
  const auto& ids = cap.ids();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (ids[k] == id) return static_cast<int>(k);
  }
  return id == kInfinityId ? kOutcomeInfinity : -3;
}

}  // namespace

RateFit fit_convergence_rate(const MapDistribution& dist, const std::vector<MinimalSetDescriptor>& minsets, int L_id,
                             const std::vector<C2Point>& test_points, int n_lo, int n_hi, SequenceSeed seed,
                             const RateOptions& opt) {
  if (test_points.empty()) throw LabError(ErrorCode::invalid_argument, "test_points is empty");
  if (n_lo < 0 || n_hi <= n_lo) throw LabError(ErrorCode::invalid_argument, "n range must satisfy 0 <= n_lo < n_hi");
  const MinimalSetDescriptor& L = find_set(minsets, L_id);
  const TestFunction phi = phi_L(L);
  const CaptureMap cap(minsets, dist.filtration().R);
  const int slot = capture_slot(cap, L_id);

  std::vector<double> tl(test_points.size());
  double mc = 0.0;
  for (std::size_t k = 0; k < test_points.size(); ++k) {
    const auto out = basin_outcomes(dist, cap, test_points[k], opt.tl_samples, opt.tl_max_iter, derive_stream(seed, k));
    long hits = 0;
    for (int o : out) hits += (o == slot);
    const double p = static_cast<double>(hits) / out.size();
    tl[k] = p;
    mc = std::max(mc, std::sqrt(p * (1.0 - p) / out.size()));
  }

  RateFit fit;
  double iterate_err = 0.0;
  std::vector<double> errs;
  std::vector<int> ns;
  for (int n = n_lo; n <= n_hi; ++n) {
    double e = 0.0;
    for (std::size_t k = 0; k < test_points.size(); ++k) {
      IterateOptions io = opt.iterate;
      io.seed = derive_stream(opt.iterate.seed, static_cast<std::uint64_t>(n));
      const MEstimate m = iterate_M(dist, phi, test_points[k], n, io);
      iterate_err = std::max(iterate_err, m.std_error);
      e = std::max(e, std::abs(m.value - tl[k]));
    }
    ns.push_back(n);
    errs.push_back(e);
  }
  fit.floor = std::max(10.0 * std::max(mc, iterate_err), 1e-12);
  // Keep the leading run of resolvable errors.
  std::size_t keep = 0;
  while (keep < errs.size() && errs[keep] > fit.floor) ++keep;
  fit.ns.assign(ns.begin(), ns.begin() + static_cast<long>(keep));
  fit.sup_errors.assign(errs.begin(), errs.begin() + static_cast<long>(keep));
  if (keep < 3) throw LabError(ErrorCode::rate_unresolved, "fewer than 3 resolvable sup-errors");
  fit.n_lo = fit.ns.front();
  fit.n_hi = fit.ns.back();

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  const double k = static_cast<double>(keep);
  for (std::size_t j = 0; j < keep; ++j) {
    const double x = fit.ns[j], y = std::log(fit.sup_errors[j]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double cxx = sxx - sx * sx / k, cxy = sxy - sx * sy / k, cyy = syy - sy * sy / k;
  fit.slope = cxy / cxx;
  fit.r_squared = cyy > 0.0 ? (cxy * cxy) / (cxx * cyy) : 1.0;
  fit.lambda_hat = std::exp(fit.slope);
  fit.rate_reported = fit.slope < 0.0 && fit.r_squared >= 0.9;
  return fit;
}

namespace {

std::uint64_t point_key(const C2Point& w) {
  constexpr double kQuantum = 1e-12;
  const double v[4] = {w.x.real(), w.x.imag(), w.y.real(), w.y.imag()};
  std::uint64_t h = 0x51ED270B27A3CF5BULL;
  for (double c : v) h = mix64(h ^ static_cast<std::uint64_t>(std::llround(c / kQuantum)));
  return h;
}

void check_weight_index(const MapDistribution& dist, int i) {
  const auto& fs = dist.finite_support();
  const int m = static_cast<int>(fs.maps.size());
  if (m < 2) throw LabError(ErrorCode::invalid_argument, "weight derivative needs at least two maps");
  if (i < 0 || i > m - 2) throw LabError(ErrorCode::invalid_argument, "weight index must lie in [0, m-2]");
}

}  // namespace

DerivativeEstimate weight_derivative_TL(const MapDistribution& dist, const std::vector<MinimalSetDescriptor>& minsets,
                                        int L_id, int i, const C2Point& z, SequenceSeed seed,
                                        const NeumannOptions& opt) {
  check_weight_index(dist, i);
  find_set(minsets, L_id);
  const auto& fs = dist.finite_support();
  const std::size_t m = fs.maps.size();
  const CaptureMap cap(minsets, dist.filtration().R);
  const int slot = capture_slot(cap, L_id);

  struct Zeta {
    double value;
    double variance;
    double total_weight;
  };
  std::unordered_map<std::uint64_t, Zeta> cache;
  DerivativeEstimate est;

  auto zeta = [&](const C2Point& w, std::uint64_t key) -> Zeta& {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const SequenceSeed s = derive_stream(seed, key);
    const auto a = basin_outcomes(dist, cap, fs.maps[static_cast<size_t>(i)].apply(w), opt.tl_samples,
                                  opt.tl_max_iter, s);
    const auto b = basin_outcomes(dist, cap, fs.maps[m - 1].apply(w), opt.tl_samples, opt.tl_max_iter, s);
    Moments d;
    for (std::size_t k = 0; k < a.size(); ++k) d.add(static_cast<double>(a[k] == slot) - (b[k] == slot));
    est.evaluations += 2;
    return cache.emplace(key, Zeta{d.mean(), d.variance() / d.n, 0.0}).first->second;
  };

  struct Node {
    C2Point w;
    double weight;
    std::uint64_t key;
  };
  std::vector<Node> frontier{{z, 1.0, point_key(z)}};
  int quiet = 0;
  double value = 0.0;
  for (int n = 0;; ++n) {
    if (n >= opt.max_terms) throw LabError(ErrorCode::series_stall, "series terms did not decay");
    double bound = 0.0;
    for (const auto& node : frontier) {
      Zeta& zt = zeta(node.w, node.key);
      value += node.weight * zt.value;
      bound += node.weight * std::abs(zt.value);
      zt.total_weight += node.weight;
    }
    est.terms = n + 1;
    quiet = bound < opt.eps_trunc ? quiet + 1 : 0;
    if (quiet >= 3) break;

    std::vector<Node> next;
    std::unordered_map<std::uint64_t, std::size_t> slot_of;
    for (const auto& node : frontier) {
      for (std::size_t j = 0; j < m; ++j) {
        const C2Point w = fs.maps[j].apply(node.w);
        // T_L is constant on escaping points and on capture neighbourhoods, so zeta vanishes there.
        if (!is_finite(w) || in_v_plus(w, cap.R()) || cap.locate(w) >= 0) continue;
        const std::uint64_t key = point_key(w);
        const double wt = node.weight * fs.weights[j];
        auto [it, fresh] = slot_of.emplace(key, next.size());
        if (fresh) {
          next.push_back({w, wt, key});
        } else {
          next[it->second].weight += wt;
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  double var = 0.0;
  for (const auto& [key, zt] : cache) var += zt.total_weight * zt.total_weight * zt.variance;
  est.value = value;
  est.error = std::sqrt(var);
  return est;
}

DerivativeEstimate fd_derivative_TL(const MapDistribution& dist, const std::vector<MinimalSetDescriptor>& minsets,
                                    int L_id, int i, const C2Point& z, double h, int samples, int max_iter,
                                    SequenceSeed seed) {
  check_weight_index(dist, i);
  find_set(minsets, L_id);
  if (!(h > 0.0)) throw LabError(ErrorCode::invalid_argument, "step h must be positive");
  const auto& fs = dist.finite_support();
  const std::size_t m = fs.maps.size();
  std::vector<double> plus = fs.weights, minus = fs.weights;
  plus[static_cast<size_t>(i)] += h;
  plus[m - 1] -= h;
  minus[static_cast<size_t>(i)] -= h;
  minus[m - 1] += h;
  for (std::size_t k = 0; k < m; ++k) {
    if (!(plus[k] > 0.0 && plus[k] < 1.0 && minus[k] > 0.0 && minus[k] < 1.0)) {
      throw LabError(ErrorCode::invalid_argument, "perturbed weights leave the open simplex");
    }
  }
  const MapDistribution dp = dist.with_weights(plus), dm = dist.with_weights(minus);
  const CaptureMap cap(minsets, dist.filtration().R);
  const int slot = capture_slot(cap, L_id);
  const auto a = basin_outcomes(dp, cap, z, samples, max_iter, seed);
  const auto b = basin_outcomes(dm, cap, z, samples, max_iter, seed);
  Moments d;
  for (std::size_t k = 0; k < a.size(); ++k) d.add(static_cast<double>(a[k] == slot) - (b[k] == slot));
  DerivativeEstimate est;
  est.value = d.mean() / (2.0 * h);
  est.error = std::sqrt(d.variance() / d.n) / (2.0 * h);
  est.terms = 1;
  est.evaluations = 2;
  return est;
}

}  // namespace henon

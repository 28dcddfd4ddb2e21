#include "henon/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace henon {

MapDistribution MapDistribution::finite(std::vector<HenonMap> maps, std::vector<double> weights) {
  if (maps.empty()) throw LabError(ErrorCode::invalid_argument, "finite distribution needs at least one map");
  if (maps.size() != weights.size()) throw LabError(ErrorCode::invalid_argument, "maps and weights differ in length");
  double total = 0.0;
  std::vector<double> cumulative;
  cumulative.reserve(weights.size());
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw LabError(ErrorCode::invalid_argument, "weights must be positive");
    total += w;
    cumulative.push_back(total);
  }
  if (std::abs(total - 1.0) > 1e-12) throw LabError(ErrorCode::invalid_argument, "weights must sum to 1");
  return MapDistribution(FiniteSupport{std::move(maps), std::move(weights), std::move(cumulative)});
}

MapDistribution MapDistribution::point_mass(const HenonMap& f) { return finite({f}, {1.0}); }

MapDistribution MapDistribution::ball(const HenonMap& base, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw LabError(ErrorCode::invalid_argument, "ball radius must be positive");
  return MapDistribution(BallNoise{base, radius});
}

const FiniteSupport& MapDistribution::finite_support() const {
  if (const auto* f = std::get_if<FiniteSupport>(&v_)) return *f;
  throw LabError(ErrorCode::unsupported_kind, "distribution is not finite");
}

const BallNoise& MapDistribution::ball_noise() const {
  if (const auto* b = std::get_if<BallNoise>(&v_)) return *b;
  throw LabError(ErrorCode::unsupported_kind, "distribution is not ball noise");
}

bool MapDistribution::is_point_mass() const {
  const auto* f = std::get_if<FiniteSupport>(&v_);
  return f && f->maps.size() == 1;
}

std::vector<MapBound> MapDistribution::support_bounds() const {
  std::vector<MapBound> out;
  if (const auto* f = std::get_if<FiniteSupport>(&v_)) {
    for (const auto& m : f->maps) out.push_back(MapBound::of(m));
  } else {
    const auto& b = std::get<BallNoise>(v_);
    out.push_back(MapBound::of(b.base, b.radius));
  }
  return out;
}

MapDistribution MapDistribution::with_weights(std::vector<double> weights) const {
  return finite(finite_support().maps, std::move(weights));
}

NoiseFamily::NoiseFamily(HenonMap base_map, double v_radius, double u_radius)
    : base(std::move(base_map)), v(v_radius), u(u_radius) {
  if (!(v > 0.0)) throw LabError(ErrorCode::invalid_argument, "family v must be positive");
  // u == v is a degenerate constant family, kept for testing.
  if (!(u >= v)) throw LabError(ErrorCode::invalid_argument, "family u must be >= v");
}

C2Point ball_offset(SequenceSeed seed, std::uint64_t index, double radius) {
  CounterRng rng(seed, index, RngDomain::map_sample);
  for (;;) {
    const double a = rng.symmetric(), b = rng.symmetric(), c = rng.symmetric(), d = rng.symmetric();
    if (a * a + b * b + c * c + d * d <= 1.0) return {Complex(radius * a, radius * b), Complex(radius * c, radius * d)};
  }
}

HenonMap sample_map(const MapDistribution& dist, SequenceSeed seed, std::uint64_t index) {
  if (dist.kind() == DistKind::finite) {
    const auto& f = dist.finite_support();
    if (f.maps.size() == 1) return f.maps.front();
    CounterRng rng(seed, index, RngDomain::map_sample);
    const double u = rng.uniform() * f.cumulative.back();
    auto it = std::upper_bound(f.cumulative.begin(), f.cumulative.end(), u);
    if (it == f.cumulative.end()) --it;
    return f.maps[static_cast<size_t>(it - f.cumulative.begin())];
  }
  const auto& b = dist.ball_noise();
  const C2Point ab = ball_offset(seed, index, b.radius);
  const Polynomial& p = b.base.poly();
  return HenonMap(b.base.alpha() + ab.x, b.base.delta(), p.with_constant(p.coeff(p.degree()) + ab.y));
}

std::vector<HenonMap> sample_sequence(const MapDistribution& dist, SequenceSeed seed, std::size_t n) {
  if (n < 1) throw LabError(ErrorCode::invalid_argument, "sequence length must be >= 1");
  std::vector<HenonMap> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(sample_map(dist, seed, k));
  return out;
}

MapDistribution inverse_distribution(const MapDistribution& dist) {
  if (dist.kind() != DistKind::finite) {
    throw LabError(ErrorCode::unsupported_kind, "inverse of ball noise is not in the additive-noise class");
  }
  const auto& f = dist.finite_support();
  std::vector<HenonMap> maps;
  maps.reserve(f.maps.size());
  for (const auto& m : f.maps) maps.push_back(inverse_as_plus(m));
  return MapDistribution::finite(std::move(maps), f.weights);
}

MapDistribution family_at(const NoiseFamily& fam, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw LabError(ErrorCode::invalid_argument, "family parameter t must lie in [0, 1]");
  return MapDistribution::ball(fam.base, fam.radius_at(t));
}

std::vector<HenonMap> support_sample(const MapDistribution& dist, std::size_t count, SequenceSeed seed) {
  if (dist.kind() == DistKind::finite && dist.finite_support().maps.size() <= count) {
    return dist.finite_support().maps;
  }
  std::vector<HenonMap> out;
  out.reserve(count);
  const SequenceSeed s = derive_stream(seed, static_cast<std::uint64_t>(RngDomain::saturation));
  for (std::size_t k = 0; k < count; ++k) out.push_back(sample_map(dist, s, k));
  return out;
}

}  // namespace henon

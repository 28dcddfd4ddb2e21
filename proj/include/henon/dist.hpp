#pragma once

#include <variant>
#include <vector>

#include "henon/core.hpp"
#include "henon/rng.hpp"

namespace henon {

struct FiniteSupport {
  std::vector<HenonMap> maps;
  std::vector<double> weights;
  std::vector<double> cumulative;  // cumulative[j] = w_0 + ... + w_j
};

/// f + (a, b): additive constants on both output coordinates, (a, b) uniform
/// on the complex 2-ball of the given radius.
struct BallNoise {
  HenonMap base;
  double radius;
};

enum class DistKind { finite, ball_noise };

class MapDistribution {
 public:
  static MapDistribution finite(std::vector<HenonMap> maps, std::vector<double> weights);
  static MapDistribution point_mass(const HenonMap& f);
  static MapDistribution ball(const HenonMap& base, double radius);

  DistKind kind() const { return std::holds_alternative<FiniteSupport>(v_) ? DistKind::finite : DistKind::ball_noise; }
  const FiniteSupport& finite_support() const;
  const BallNoise& ball_noise() const;

  /// Single-map finite distribution.
  bool is_point_mass() const;

  /// Envelope bounds covering the whole support.
  std::vector<MapBound> support_bounds() const;

  /// Escape radii certified for the whole support.
  FiltrationParams filtration(double rho_margin = 1.0) const { return condition_a_radius(support_bounds(), rho_margin); }

  /// Same support, new weights (finite only).
  MapDistribution with_weights(std::vector<double> weights) const;

 private:
  explicit MapDistribution(std::variant<FiniteSupport, BallNoise> v) : v_(std::move(v)) {}
  std::variant<FiniteSupport, BallNoise> v_;
};

struct NoiseFamily {
  HenonMap base;
  double v;
  double u;

  NoiseFamily(HenonMap base, double v, double u);
  double radius_at(double t) const { return u * t + (1.0 - t) * v; }
};

HenonMap sample_map(const MapDistribution& dist, SequenceSeed seed, std::uint64_t index);
std::vector<HenonMap> sample_sequence(const MapDistribution& dist, SequenceSeed seed, std::size_t n);

/// Noise offsets (a, b) drawn for a ball-noise sample; exposed for support checks.
C2Point ball_offset(SequenceSeed seed, std::uint64_t index, double radius);

MapDistribution inverse_distribution(const MapDistribution& dist);
MapDistribution family_at(const NoiseFamily& fam, double t);

/// Finite list of support representatives: every finite map (or a weighted
/// sample of `count` when larger), or `count` ball-noise draws.
std::vector<HenonMap> support_sample(const MapDistribution& dist, std::size_t count, SequenceSeed seed);

}  // namespace henon

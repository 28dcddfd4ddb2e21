#pragma once

#include <memory>
#include <vector>

#include "henon/dist.hpp"

namespace henon {

/// A one-sided sequence gamma_0, gamma_1, ... of maps. Cheap to copy; all
/// views are immutable and safe to read concurrently.
class MapSequence {
 public:
  /// gamma_k = sample_map(dist, seed, k).
  static MapSequence sampled(std::shared_ptr<const MapDistribution> dist, SequenceSeed seed);
  static MapSequence sampled(const MapDistribution& dist, SequenceSeed seed);
  /// Explicit maps, repeated periodically past the end.
  static MapSequence periodic(std::vector<HenonMap> maps);
  static MapSequence constant(const HenonMap& f) { return periodic({f}); }

  HenonMap at(std::uint64_t k) const;

  /// sigma^k(gamma).
  MapSequence shifted(std::uint64_t k) const;
  /// First `prefix` maps from this sequence, later indices from `tail`.
  MapSequence spliced(std::uint64_t prefix, const MapSequence& tail) const;
  /// Each map replaced by inverse_as_plus of it (backward dynamics in forward form).
  MapSequence mirrored() const;

  struct Node;

 private:
  MapSequence(std::shared_ptr<const Node> node, std::uint64_t offset) : node_(std::move(node)), offset_(offset) {}
  std::shared_ptr<const Node> node_;
  std::uint64_t offset_ = 0;
};

}  // namespace henon

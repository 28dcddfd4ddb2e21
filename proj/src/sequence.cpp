#include "henon/sequence.hpp"

#include <variant>

namespace henon {

struct SampledNode {
  std::shared_ptr<const MapDistribution> dist;
  SequenceSeed seed;
};
struct PeriodicNode {
  std::vector<HenonMap> maps;
};
struct SplicedNode {
  std::uint64_t prefix;
  MapSequence head;
  MapSequence tail;
};
struct MirroredNode {
  MapSequence inner;
};

struct MapSequence::Node {
  std::variant<SampledNode, PeriodicNode, SplicedNode, MirroredNode> v;
};

MapSequence MapSequence::sampled(std::shared_ptr<const MapDistribution> dist, SequenceSeed seed) {
  return MapSequence(std::make_shared<const Node>(Node{SampledNode{std::move(dist), seed}}), 0);
}

MapSequence MapSequence::sampled(const MapDistribution& dist, SequenceSeed seed) {
  return sampled(std::make_shared<const MapDistribution>(dist), seed);
}

MapSequence MapSequence::periodic(std::vector<HenonMap> maps) {
  if (maps.empty()) throw LabError(ErrorCode::invalid_argument, "explicit sequence must be nonempty");
  return MapSequence(std::make_shared<const Node>(Node{PeriodicNode{std::move(maps)}}), 0);
}

HenonMap MapSequence::at(std::uint64_t k) const {
  const std::uint64_t i = k + offset_;
  return std::visit(
      [i](const auto& n) -> HenonMap {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SampledNode>) {
          return sample_map(*n.dist, n.seed, i);
        } else if constexpr (std::is_same_v<T, PeriodicNode>) {
          return n.maps[i % n.maps.size()];
        } else if constexpr (std::is_same_v<T, SplicedNode>) {
          return i < n.prefix ? n.head.at(i) : n.tail.at(i);
        } else {
          return inverse_as_plus(n.inner.at(i));
        }
      },
      node_->v);
}

MapSequence MapSequence::shifted(std::uint64_t k) const { return MapSequence(node_, offset_ + k); }

MapSequence MapSequence::spliced(std::uint64_t prefix, const MapSequence& tail) const {
  // Splice in absolute coordinates of this view.
  return MapSequence(std::make_shared<const Node>(Node{SplicedNode{prefix, *this, tail}}), 0);
}

MapSequence MapSequence::mirrored() const {
  return MapSequence(std::make_shared<const Node>(Node{MirroredNode{*this}}), 0);
}

}  // namespace henon

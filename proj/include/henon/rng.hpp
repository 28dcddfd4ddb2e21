#pragma once

#include <cstdint>

namespace henon {

/// Addresses one random map sequence: draws are keyed by (master_seed, stream_id, index).
struct SequenceSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  friend bool operator==(const SequenceSeed&, const SequenceSeed&) = default;
};

std::uint64_t mix64(std::uint64_t z);

/// Child stream i of a seed; used to give independent runs their own sequences.
SequenceSeed derive_stream(SequenceSeed seed, std::uint64_t child);

/// Domain tags keep draws for different purposes independent under the same key.
enum class RngDomain : std::uint64_t {
  map_sample = 1,
  start_vector = 2,
  probe = 3,
  saturation = 4,
  monte_carlo = 5,
};

/// Counter-based generator: the stream is a pure function of its key, so any
/// worker can reproduce any draw without shared state.
class CounterRng {
 public:
  CounterRng(SequenceSeed seed, std::uint64_t index, RngDomain domain);

  std::uint64_t next() { return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform on [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace henon

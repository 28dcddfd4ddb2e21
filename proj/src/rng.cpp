#include "henon/rng.hpp"

namespace henon {

std::uint64_t mix64(std::uint64_t z) {
  // SplitMix64 finalizer.
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SequenceSeed derive_stream(SequenceSeed seed, std::uint64_t child) {
  return {seed.master_seed, mix64(seed.stream_id * 0xD1B54A32D192ED03ULL + mix64(child + 0x632BE59BD9B4E019ULL))};
}

CounterRng::CounterRng(SequenceSeed seed, std::uint64_t index, RngDomain domain) {
  std::uint64_t k = mix64(seed.master_seed + 0x9E3779B97F4A7C15ULL);
  k = mix64(k ^ (seed.stream_id + 0xA0761D6478BD642FULL));
  k = mix64(k ^ (index + 0xE7037ED1A0B428DBULL));
  key_ = mix64(k ^ static_cast<std::uint64_t>(domain));
}

}  // namespace henon

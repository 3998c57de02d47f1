#include "twophase/rng.hpp"

namespace twophase {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_key(std::uint64_t base_seed, std::uint64_t replicate, StreamPurpose purpose,
                         std::uint64_t substream) {
  std::uint64_t h = splitmix64(base_seed);
  h = splitmix64(h ^ replicate);
  h = splitmix64(h ^ static_cast<std::uint64_t>(purpose));
  return splitmix64(h ^ substream);
}

std::mt19937_64 make_stream(std::uint64_t base_seed, std::uint64_t replicate,
                            StreamPurpose purpose, std::uint64_t substream) {
  return std::mt19937_64(stream_key(base_seed, replicate, purpose, substream));
}

}  // namespace twophase

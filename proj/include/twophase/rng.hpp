#pragma once

#include <cstdint>
#include <random>

namespace twophase {

// Purpose tags keep the population and sampling streams of a replicate
// independent of each other.
enum class StreamPurpose : std::uint64_t { population = 1, sampling = 2, user = 3 };

std::uint64_t splitmix64(std::uint64_t x);

// Seed derived from (base_seed, replicate, purpose, substream); the same key
// always yields the same stream regardless of scheduling.
std::uint64_t stream_key(std::uint64_t base_seed, std::uint64_t replicate, StreamPurpose purpose,
                         std::uint64_t substream = 0);

std::mt19937_64 make_stream(std::uint64_t base_seed, std::uint64_t replicate,
                            StreamPurpose purpose, std::uint64_t substream = 0);

}  // namespace twophase

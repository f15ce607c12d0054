#pragma once

#include <cstdint>
#include <random>

namespace tdimc {

// splitmix64 finalizer; decorrelates structured seed inputs.
std::uint64_t mix64(std::uint64_t x);

// Independent generator for (master_seed, stream). Same pair -> same sequence,
// so Monte Carlo trials stay reproducible under any partitioning.
std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t stream);

// One N(mean, sigma) draw. sigma == 0 returns mean without consuming entropy.
double normal_draw(std::mt19937_64& rng, double mean, double sigma);

// One U[lo, hi) draw.
double uniform_draw(std::mt19937_64& rng, double lo, double hi);

}  // namespace tdimc

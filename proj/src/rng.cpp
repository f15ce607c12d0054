#include "tdimc/rng.hpp"

namespace tdimc {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t stream) {
    std::uint64_t s = mix64(master_seed ^ mix64(stream));
    return std::mt19937_64(s);
}

double normal_draw(std::mt19937_64& rng, double mean, double sigma) {
    if (sigma <= 0.0) return mean;
    std::normal_distribution<double> dist(mean, sigma);
    return dist(rng);
}

double uniform_draw(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

}  // namespace tdimc

#pragma once

#include <boost/random/normal_distribution.hpp>
#include <cstdint>
#include <random>
#include <vector>

namespace semigrav {

/// Per-trial seed from (master_seed, trial_index):
///   z = master_seed + 0x9E3779B97F4A7C15 * (trial_index + 1)   (mod 2^64)
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   seed = z ^ (z >> 31)
/// i.e. the SplitMix64 output at position trial_index + 1 of a stream
/// started at master_seed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Standard normal deviates: std::mt19937_64 seeded with `seed`, transformed
/// by Boost.Random's ziggurat normal_distribution. Both are specified
/// algorithms, so a given seed yields the same stream on every platform with
/// the same Boost version.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next() { return dist_(engine_); }
    void fill(std::vector<double>& out);

private:
    std::mt19937_64 engine_;
    boost::random::normal_distribution<double> dist_;
};

}  // namespace semigrav

#pragma once

#include <cstdint>
#include <random>

namespace rmt {

// Seed for a deterministic stream: same seed + same parameters gives a
// bit-identical sample sequence on every platform.
struct RngSeed {
    std::uint64_t value = 0;
};

std::uint64_t splitmix64(std::uint64_t& state);

// One RNG stream. Independent streams are derived from (seed, stream index),
// so draws can run in parallel without sharing state. Gaussian variates use
// Box-Muller (std::normal_distribution is implementation-defined and would
// break the determinism contract across standard libraries).
class RandomStream {
public:
    explicit RandomStream(RngSeed seed, std::uint64_t stream = 0);

    std::uint64_t bits() { return gen_(); }

    // uniform on [0,1)
    double uniform();
    // uniform on [lo,hi)
    double uniform(double lo, double hi);
    // standard normal
    double gaussian();
    // exponential with rate lambda
    double exponential(double lambda);

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace rmt

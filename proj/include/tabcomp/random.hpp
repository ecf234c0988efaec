#pragma once

#include <cstdint>
#include <random>

namespace tabcomp {

// Seeded random source with platform-independent output.
//
// std::mt19937_64 has a fully specified output sequence, but the standard
// distributions do not, so bounded draws use rejection sampling on raw words.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound);

    // Independent stream number `stream` derived from this seed (splitmix64 mixing).
    static Random derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace tabcomp

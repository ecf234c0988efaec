#include "tabcomp/random.hpp"

namespace tabcomp {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Random::uniform_below(std::uint64_t bound) {
    // Reject the low (2^64 mod bound) words so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t word = engine_();
        if (word >= threshold)
            return word % bound;
    }
}

Random Random::derive(std::uint64_t seed, std::uint64_t stream) {
    return Random(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

} // namespace tabcomp

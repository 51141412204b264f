#pragma once

#include <cstdint>
#include <vector>

namespace cqsec {

// Deterministic RNG with a fully pinned bit stream (splitmix64). std::mt19937
// would also be portable, but the std distributions on top of it are not; the
// report-determinism guarantee needs the exact double stream to be ours.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n)
    int next_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

    // standard normal via Box-Muller (uses two uniforms, no cached spare)
    double next_gaussian();

    // random probability vector of length n (normalized exponentials)
    std::vector<double> next_distribution(int n);

    // derive an independent stream (for parallel suite items)
    DetRng fork() { return DetRng(next_u64() ^ 0xd1b54a32d192ed03ULL); }

private:
    std::uint64_t state_;
};

}  // namespace cqsec

#pragma once

#include <cstdint>

namespace permstab {

// Deterministic splittable generator (splitmix64 core). The seed fully
// determines every draw; split() derives an independent stream so batched
// sampling stays reproducible regardless of batch execution order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by 128-bit multiply-high; rejection-free.
    int below(int bound) {
        return static_cast<int>((static_cast<unsigned __int128>(next()) *
                                 static_cast<unsigned __int128>(bound)) >> 64);
    }

    std::int64_t below64(std::int64_t bound) {
        return static_cast<std::int64_t>((static_cast<unsigned __int128>(next()) *
                                          static_cast<unsigned __int128>(bound)) >> 64);
    }

    bool coin() { return (next() & 1) != 0; }

    Rng split(std::uint64_t stream) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace permstab

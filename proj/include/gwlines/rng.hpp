#ifndef GWLINES_RNG_HPP
#define GWLINES_RNG_HPP

#include <cstdint>

namespace gwlines {

/// Splitmix64 stream; used wherever the spec calls for seeded randomness.
/// Self-contained so output is identical across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~0ull - ~0ull % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Derive an independent sub-stream deterministically.
    Rng fork(std::uint64_t tag) {
        Rng r(state_ ^ (0x6a09e667f3bcc909ull + tag * 0x9e3779b97f4a7c15ull));
        r.next();
        return r;
    }

private:
    std::uint64_t state_;
};

} // namespace gwlines

#endif

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace wcdag {

/// Deterministic splitmix64 generator. Small state, identical streams on
/// every platform, which keeps experiment CSVs byte-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double u01() { return (next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, n).
    int below(int n) {
        if (n <= 0) throw std::invalid_argument("Rng::below: n must be positive");
        return static_cast<int>(next() % static_cast<std::uint64_t>(n));
    }

    /// Uniform in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("Rng::uniform_int: empty range");
        return lo + below(hi - lo + 1);
    }

    double exponential(double rate) {
        if (rate <= 0) throw std::invalid_argument("Rng::exponential: rate must be positive");
        return -std::log1p(-u01()) / rate;
    }

    int binomial(int n, double p) {
        if (n < 0 || p < 0 || p > 1) throw std::invalid_argument("Rng::binomial: bad parameters");
        int hits = 0;
        for (int i = 0; i < n; ++i)
            if (u01() < p) ++hits;
        return hits;
    }

private:
    std::uint64_t state_;
};

/// Stable per-instance seed derivation (seed, stream) -> seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    return r.next();
}

}  // namespace wcdag

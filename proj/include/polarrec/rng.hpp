#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace polarrec::rng {

// All sampling goes through these helpers so that results depend only on the
// seed and the call sequence, never on the standard library's distribution
// implementations (which differ across platforms).

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Derive an independent sub-seed from a master seed and a stream tag.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream));
}

// Unbiased draw in [0, n). Rejection sampling over the raw 64-bit stream.
inline std::uint64_t bounded(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return x % n;
}

// Uniform double in [0, 1) with 53 bits of randomness.
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// First k elements of a seeded Fisher-Yates shuffle of [0, n).
std::vector<std::size_t> sample_without_replacement(std::mt19937_64& gen,
                                                    std::size_t n,
                                                    std::size_t k);

// Zipf sampler over ranks [0, n) with exponent s: P(r) proportional to 1/(r+1)^s.
class ZipfSampler {
public:
    ZipfSampler(std::size_t n, double exponent);
    std::size_t operator()(std::mt19937_64& gen) const;

private:
    std::vector<double> cdf_;
};

}  // namespace polarrec::rng

#include "polarrec/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polarrec::rng {

std::vector<std::size_t> sample_without_replacement(std::mt19937_64& gen,
                                                    std::size_t n,
                                                    std::size_t k) {
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    const std::size_t take = std::min(k, n);
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded(gen, n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(take);
    return pool;
}

ZipfSampler::ZipfSampler(std::size_t n, double exponent) {
    cdf_.resize(n);
    double total = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        total += 1.0 / std::pow(static_cast<double>(r + 1), exponent);
        cdf_[r] = total;
    }
    for (auto& c : cdf_) c /= total;
}

std::size_t ZipfSampler::operator()(std::mt19937_64& gen) const {
    const double u = uniform01(gen);
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) return cdf_.size() - 1;
    return static_cast<std::size_t>(it - cdf_.begin());
}

}  // namespace polarrec::rng

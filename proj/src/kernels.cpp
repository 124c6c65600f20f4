#include "polarrec/kernels.hpp"

#include <cassert>
#include <stdexcept>

namespace polarrec::kernels {

using vectorspace::SparseVector;
using vectorspace::cosine;

void score_all_serial(const SparseVector& query,
                      std::span<const SparseVector> items,
                      std::span<double> out) {
    assert(out.size() == items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        out[i] = cosine(query, items[i]);
    }
}

void score_all_parallel(const SparseVector& query,
                        std::span<const SparseVector> items,
                        std::span<double> out) {
    assert(out.size() == items.size());
    const auto n = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[i] = cosine(query, items[i]);
    }
}

void score_all_serial(const SparseVector& query,
                      std::span<const SparseVector* const> items,
                      std::span<double> out) {
    assert(out.size() == items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        out[i] = cosine(query, *items[i]);
    }
}

void score_all_parallel(const SparseVector& query,
                        std::span<const SparseVector* const> items,
                        std::span<double> out) {
    assert(out.size() == items.size());
    const auto n = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[i] = cosine(query, *items[static_cast<std::size_t>(i)]);
    }
}

double pairwise_mean_serial(std::span<const SparseVector> items) {
    if (items.size() < 2) throw std::runtime_error("pairwise mean needs at least 2 items");
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            row += cosine(items[i], items[j]);
        }
        sum += row;
    }
    const double n = static_cast<double>(items.size());
    return sum / (n * (n - 1.0) / 2.0);
}

double pairwise_mean_parallel(std::span<const SparseVector> items) {
    if (items.size() < 2) throw std::runtime_error("pairwise mean needs at least 2 items");
    const auto n = static_cast<std::int64_t>(items.size());
    // Row partials, then a serial reduction in row order: the summation
    // order matches the serial kernel and is independent of thread count.
    std::vector<double> partial(static_cast<std::size_t>(n), 0.0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n - 1; ++i) {
        double row = 0.0;
        for (std::int64_t j = i + 1; j < n; ++j) {
            row += cosine(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(j)]);
        }
        partial[static_cast<std::size_t>(i)] = row;
    }
    double sum = 0.0;
    for (double p : partial) sum += p;
    const double nd = static_cast<double>(n);
    return sum / (nd * (nd - 1.0) / 2.0);
}

double pair_list_mean_serial(std::span<const SparseVector> items,
                             std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
    if (pairs.empty()) throw std::runtime_error("pair list mean over empty pair list");
    double sum = 0.0;
    for (const auto& [i, j] : pairs) {
        sum += cosine(items[i], items[j]);
    }
    return sum / static_cast<double>(pairs.size());
}

double pair_list_mean_parallel(std::span<const SparseVector> items,
                               std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
    if (pairs.empty()) throw std::runtime_error("pair list mean over empty pair list");
    const auto n = static_cast<std::int64_t>(pairs.size());
    std::vector<double> scores(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < n; ++p) {
        const auto& [i, j] = pairs[static_cast<std::size_t>(p)];
        scores[static_cast<std::size_t>(p)] = cosine(items[i], items[j]);
    }
    double sum = 0.0;
    for (double s : scores) sum += s;
    return sum / static_cast<double>(n);
}

}  // namespace polarrec::kernels

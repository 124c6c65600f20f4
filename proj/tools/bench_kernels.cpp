// Times the serial reference kernels against the OpenMP versions on random
// sparse vectors and reports speedups. Thread count follows OMP_NUM_THREADS.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polarrec/kernels.hpp"
#include "polarrec/rng.hpp"

using polarrec::vectorspace::SparseVector;

namespace {

std::vector<SparseVector> random_vectors(std::size_t n, std::size_t dim, std::size_t nnz,
                                         std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<SparseVector> out(n);
    for (auto& v : out) {
        auto idx = polarrec::rng::sample_without_replacement(gen, dim, nnz);
        std::sort(idx.begin(), idx.end());
        double norm2 = 0.0;
        for (auto i : idx) {
            const double w = polarrec::rng::uniform01(gen) + 0.01;
            v.entries.emplace_back(static_cast<std::uint32_t>(i), w);
            norm2 += w * w;
        }
        const double norm = std::sqrt(norm2);
        for (auto& [i, w] : v.entries) w /= norm;
    }
    return out;
}

template <typename F>
double time_ms(F&& fn, int reps) {
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif

    const auto items = random_vectors(100'000, 200'000, 40, 42);
    const auto query = random_vectors(1, 200'000, 40, 43).front();
    std::vector<double> scores(items.size());

    const double score_serial =
        time_ms([&] { polarrec::kernels::score_all_serial(query, items, scores); }, 5);
    const double score_parallel =
        time_ms([&] { polarrec::kernels::score_all_parallel(query, items, scores); }, 5);
    std::printf("score_all      n=%zu      serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                items.size(), score_serial, score_parallel, score_serial / score_parallel);

    const auto users = random_vectors(2'000, 50'000, 60, 44);
    volatile double sink = 0.0;
    const double pair_serial =
        time_ms([&] { sink = polarrec::kernels::pairwise_mean_serial(users); }, 3);
    const double pair_parallel =
        time_ms([&] { sink = polarrec::kernels::pairwise_mean_parallel(users); }, 3);
    std::printf("pairwise_mean  n=%zu        serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n",
                users.size(), pair_serial, pair_parallel, pair_serial / pair_parallel);
    (void)sink;
    return 0;
}

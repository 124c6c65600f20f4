#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarrec/vectorspace.hpp"

namespace polarrec::kernels {

// Hot inner loops of the pipeline. Each kernel exists twice: a serial
// reference and an OpenMP version. The parallel versions compute each output
// slot (or row partial) independently and reduce in a fixed order, so their
// results do not depend on the thread count. Tests compare the two; the
// bench tool times them.

// out[i] = cosine(query, items[i]); out.size() must equal items.size().
void score_all_serial(const vectorspace::SparseVector& query,
                      std::span<const vectorspace::SparseVector> items,
                      std::span<double> out);
void score_all_parallel(const vectorspace::SparseVector& query,
                        std::span<const vectorspace::SparseVector> items,
                        std::span<double> out);

// Same kernels over item pointers, for callers that score a filtered view
// without copying vectors.
void score_all_serial(const vectorspace::SparseVector& query,
                      std::span<const vectorspace::SparseVector* const> items,
                      std::span<double> out);
void score_all_parallel(const vectorspace::SparseVector& query,
                        std::span<const vectorspace::SparseVector* const> items,
                        std::span<double> out);

// Mean cosine over all unordered pairs; requires >= 2 items.
double pairwise_mean_serial(std::span<const vectorspace::SparseVector> items);
double pairwise_mean_parallel(std::span<const vectorspace::SparseVector> items);

// Mean cosine over an explicit pair list (flattened i,j index pairs).
double pair_list_mean_serial(std::span<const vectorspace::SparseVector> items,
                             std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);
double pair_list_mean_parallel(std::span<const vectorspace::SparseVector> items,
                               std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);

}  // namespace polarrec::kernels

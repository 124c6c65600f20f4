#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarrec/recommender.hpp"

namespace polarrec::evalmetrics {

using filterpipe::Stance;
using recommender::Variant;

// Mean pairwise cosine over all unordered pairs; requires >= 2 items.
double intra_list_similarity(std::span<const vectorspace::SparseVector> items);

// 1 - intra_list_similarity.
double diversity(std::span<const vectorspace::SparseVector> items);

// Mean over items of 1 - cosine(item, user profile vector); requires a
// nonempty list and a nonzero user vector.
double serendipity(std::span<const vectorspace::SparseVector> items,
                   const vectorspace::SparseVector& user_vec);

// Mean pairwise cosine between all users of a stance. Exact when C(n,2) <=
// max_pairs, else over a seeded uniform sample of max_pairs distinct pairs.
struct TopicSimilarity {
    double value;
    bool sampled;
    std::uint64_t n_pairs;
};
TopicSimilarity avg_topic_similarity(std::span<const vectorspace::SparseVector> user_vectors,
                                     std::uint64_t max_pairs = 2'000'000,
                                     std::uint64_t seed = 0);

struct ReportRow {
    Stance stance;
    Variant variant;
    double serendipity;
    double diversity;
    std::uint64_t n_users;          // users sampled for this stance
    std::uint64_t skipped_serendipity;  // lists with < 1 item
    std::uint64_t skipped_diversity;    // lists with < 2 items
};

struct EvaluationReport {
    std::vector<ReportRow> rows;  // 2 stances x 4 variants
    std::uint64_t n_users_side_a = 0;
    std::uint64_t n_users_side_b = 0;
    bool clamped = false;  // fewer users available than requested
    std::uint64_t seed = 0;
    std::uint64_t n_per_stance = 0;  // candidate-set parameter
};

// Samples min(n_users_per_stance, available) users per stance (seeded,
// without replacement), recommends under all four variants and averages
// serendipity and diversity per (stance, variant). Deterministic given
// (seed, inputs), independent of parallelism.
EvaluationReport run_evaluation(const std::vector<stance::UserProfile>& profiles,
                                const recommender::CandidateSet& candidates,
                                const vectorspace::VectorSpace& space,
                                std::uint64_t n_users_per_stance = 1500,
                                std::size_t k = 10,
                                double ratio = 0.5,
                                std::size_t query_trigrams = 1,
                                std::uint64_t seed = 0,
                                std::vector<recommender::RecommendationList>* dump = nullptr);

// Human-readable aligned table.
std::string format_report_table(const EvaluationReport& report);
// Machine-readable TSV with a header row.
std::string format_report_tsv(const EvaluationReport& report);

}  // namespace polarrec::evalmetrics

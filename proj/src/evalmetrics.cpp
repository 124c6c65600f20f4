#include "polarrec/evalmetrics.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "polarrec/kernels.hpp"
#include "polarrec/rng.hpp"

namespace polarrec::evalmetrics {

using vectorspace::SparseVector;

double intra_list_similarity(std::span<const SparseVector> items) {
    if (items.size() < 2) throw std::runtime_error("intra_list_similarity needs at least 2 items");
    return kernels::pairwise_mean_parallel(items);
}

double diversity(std::span<const SparseVector> items) {
    return 1.0 - intra_list_similarity(items);
}

double serendipity(std::span<const SparseVector> items, const SparseVector& user_vec) {
    if (items.empty()) throw std::runtime_error("serendipity of an empty list");
    if (user_vec.empty()) throw std::runtime_error("serendipity against a zero user vector");
    double sum = 0.0;
    for (const auto& item : items) {
        sum += 1.0 - vectorspace::cosine(item, user_vec);
    }
    return sum / static_cast<double>(items.size());
}

TopicSimilarity avg_topic_similarity(std::span<const SparseVector> user_vectors,
                                     std::uint64_t max_pairs,
                                     std::uint64_t seed) {
    const std::uint64_t n = user_vectors.size();
    if (n < 2) throw std::runtime_error("avg_topic_similarity needs at least 2 users");
    const std::uint64_t total_pairs = n * (n - 1) / 2;
    if (total_pairs <= max_pairs) {
        return {kernels::pairwise_mean_parallel(user_vectors), false, total_pairs};
    }
    // Seeded uniform sample of max_pairs distinct unordered pairs.
    std::mt19937_64 gen(rng::derive_seed(seed, 0x70617273));
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(max_pairs);
    while (pairs.size() < max_pairs) {
        auto i = static_cast<std::uint32_t>(rng::bounded(gen, n));
        auto j = static_cast<std::uint32_t>(rng::bounded(gen, n));
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        const std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
        if (seen.insert(key).second) pairs.emplace_back(i, j);
    }
    return {kernels::pair_list_mean_parallel(user_vectors, pairs), true, max_pairs};
}

EvaluationReport run_evaluation(const std::vector<stance::UserProfile>& profiles,
                                const recommender::CandidateSet& candidates,
                                const vectorspace::VectorSpace& space,
                                std::uint64_t n_users_per_stance,
                                std::size_t k,
                                double ratio,
                                std::size_t query_trigrams,
                                std::uint64_t seed,
                                std::vector<recommender::RecommendationList>* dump) {
    std::unordered_map<std::string, const SparseVector*> vector_of_tweet;
    vector_of_tweet.reserve(candidates.items.size());
    for (const auto& c : candidates.items) vector_of_tweet.emplace(c.tweet_id, &c.vector);

    // Per-stance user indices in account_id order (profiles are sorted).
    std::vector<std::size_t> side_a, side_b;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        (profiles[i].assigned_stance == Stance::SideA ? side_a : side_b).push_back(i);
    }
    if (side_a.empty() || side_b.empty()) {
        throw std::runtime_error("a stance has zero classified users");
    }

    EvaluationReport report;
    report.seed = seed;
    report.n_per_stance = candidates.n_side_a;

    auto pick = [&](const std::vector<std::size_t>& pool, std::uint64_t stream) {
        std::mt19937_64 gen(rng::derive_seed(seed, stream));
        auto sel = rng::sample_without_replacement(
            gen, pool.size(), static_cast<std::size_t>(n_users_per_stance));
        std::sort(sel.begin(), sel.end());
        std::vector<std::size_t> out;
        out.reserve(sel.size());
        for (auto s : sel) out.push_back(pool[s]);
        return out;
    };
    const auto sample_a = pick(side_a, 0xa);
    const auto sample_b = pick(side_b, 0xb);
    report.n_users_side_a = sample_a.size();
    report.n_users_side_b = sample_b.size();
    report.clamped =
        sample_a.size() < n_users_per_stance || sample_b.size() < n_users_per_stance;

    constexpr Variant kVariants[] = {Variant::Standard, Variant::SideAOnly, Variant::SideBOnly,
                                     Variant::Hybrid};

    struct UserMetrics {
        // one entry per variant: (serendipity, diversity), each optional
        std::optional<double> ser[4];
        std::optional<double> div[4];
    };

    auto evaluate_side = [&](const std::vector<std::size_t>& users, Stance stance) {
        std::vector<UserMetrics> metrics(users.size());
        std::vector<std::vector<recommender::RecommendationList>> lists(
            dump ? users.size() : std::size_t{0});
        const auto n = static_cast<std::int64_t>(users.size());
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t u = 0; u < n; ++u) {
            const auto& user = profiles[users[static_cast<std::size_t>(u)]];
            for (std::size_t v = 0; v < 4; ++v) {
                auto list = recommender::recommend(user, candidates, kVariants[v], space, k,
                                                   ratio, query_trigrams);
                std::vector<SparseVector> vectors;
                vectors.reserve(list.items.size());
                for (const auto& item : list.items) {
                    vectors.push_back(*vector_of_tweet.at(item.tweet_id));
                }
                auto& m = metrics[static_cast<std::size_t>(u)];
                if (!vectors.empty() && !user.vector.empty()) {
                    m.ser[v] = serendipity(vectors, user.vector);
                }
                if (vectors.size() >= 2) {
                    double sum = 0.0;
                    for (std::size_t i = 0; i + 1 < vectors.size(); ++i) {
                        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
                            sum += vectorspace::cosine(vectors[i], vectors[j]);
                        }
                    }
                    const auto nd = static_cast<double>(vectors.size());
                    m.div[v] = 1.0 - sum / (nd * (nd - 1.0) / 2.0);
                }
                if (dump) lists[static_cast<std::size_t>(u)].push_back(std::move(list));
            }
        }
        if (dump) {
            for (auto& per_user : lists) {
                for (auto& list : per_user) dump->push_back(std::move(list));
            }
        }
        // Fixed-order aggregation so floating-point sums are stable.
        for (std::size_t v = 0; v < 4; ++v) {
            ReportRow row{};
            row.stance = stance;
            row.variant = kVariants[v];
            row.n_users = users.size();
            double ser_sum = 0.0, div_sum = 0.0;
            std::uint64_t ser_n = 0, div_n = 0;
            for (const auto& m : metrics) {
                if (m.ser[v]) {
                    ser_sum += *m.ser[v];
                    ++ser_n;
                } else {
                    ++row.skipped_serendipity;
                }
                if (m.div[v]) {
                    div_sum += *m.div[v];
                    ++div_n;
                } else {
                    ++row.skipped_diversity;
                }
            }
            row.serendipity = ser_n ? ser_sum / static_cast<double>(ser_n) : 0.0;
            row.diversity = div_n ? div_sum / static_cast<double>(div_n) : 0.0;
            report.rows.push_back(row);
        }
    };
    evaluate_side(sample_a, Stance::SideA);
    evaluate_side(sample_b, Stance::SideB);
    return report;
}

std::string format_report_table(const EvaluationReport& report) {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-12s %-12s %12s %12s %8s %8s\n", "stance", "variant",
                  "serendipity", "diversity", "users", "skipped");
    out += buf;
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof(buf), "%-12s %-12s %12.3f %12.3f %8llu %8llu\n",
                      filterpipe::stance_name(row.stance), recommender::variant_name(row.variant),
                      row.serendipity, row.diversity,
                      static_cast<unsigned long long>(row.n_users),
                      static_cast<unsigned long long>(row.skipped_diversity));
        out += buf;
    }
    return out;
}

std::string format_report_tsv(const EvaluationReport& report) {
    std::string out =
        "stance\tvariant\tserendipity\tdiversity\tn_users\tskipped_serendipity\tskipped_diversity\n";
    char buf[200];
    for (const auto& row : report.rows) {
        std::snprintf(buf, sizeof(buf), "%s\t%s\t%.6f\t%.6f\t%llu\t%llu\t%llu\n",
                      filterpipe::stance_name(row.stance), recommender::variant_name(row.variant),
                      row.serendipity, row.diversity,
                      static_cast<unsigned long long>(row.n_users),
                      static_cast<unsigned long long>(row.skipped_serendipity),
                      static_cast<unsigned long long>(row.skipped_diversity));
        out += buf;
    }
    return out;
}

}  // namespace polarrec::evalmetrics

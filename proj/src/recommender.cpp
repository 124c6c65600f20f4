#include "polarrec/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polarrec/kernels.hpp"
#include "polarrec/rng.hpp"

namespace polarrec::recommender {

using vectorspace::SparseVector;

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Standard: return "standard";
        case Variant::SideAOnly: return "side_a_only";
        case Variant::SideBOnly: return "side_b_only";
        case Variant::Hybrid: return "hybrid";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "standard") return Variant::Standard;
    if (name == "side_a_only" || name == "side-a" || name == "side_a") return Variant::SideAOnly;
    if (name == "side_b_only" || name == "side-b" || name == "side_b") return Variant::SideBOnly;
    if (name == "hybrid") return Variant::Hybrid;
    return std::nullopt;
}

CandidateSet sample_candidates(const corpus::Corpus& corpus,
                               const std::vector<stance::UserProfile>& profiles,
                               const textproc::StopwordSet& stoplist,
                               const vectorspace::VectorSpace& space,
                               std::uint64_t n_per_stance,
                               std::uint64_t seed) {
    // Per-stance tweet pools, in deterministic (account, file) order.
    std::vector<const corpus::Tweet*> pool_a;
    std::vector<const corpus::Tweet*> pool_b;
    for (const auto& p : profiles) {
        auto it = corpus.tweets_by_account.find(p.account_id);
        if (it == corpus.tweets_by_account.end()) continue;
        auto& pool = (p.assigned_stance == Stance::SideA) ? pool_a : pool_b;
        for (const auto& tid : it->second) pool.push_back(&corpus.tweets.at(tid));
    }

    CandidateSet set;
    set.rng_seed = seed;
    auto sample_side = [&](std::vector<const corpus::Tweet*>& pool, Stance stance,
                           std::uint64_t stream) {
        if (pool.size() < n_per_stance) {
            throw std::runtime_error(std::string("candidate pool for ") +
                                     filterpipe::stance_name(stance) + " holds " +
                                     std::to_string(pool.size()) + " tweets, " +
                                     std::to_string(n_per_stance) + " requested");
        }
        std::mt19937_64 gen(rng::derive_seed(seed, stream));
        const auto picks = rng::sample_without_replacement(gen, pool.size(),
                                                           static_cast<std::size_t>(n_per_stance));
        for (const auto idx : picks) {
            const corpus::Tweet* t = pool[idx];
            Candidate c;
            c.tweet_id = t->tweet_id;
            c.account_id = t->account_id;
            c.stance = stance;
            vectorspace::TrigramCounts counts;
            for (auto& tri : textproc::text_to_trigrams(t->text, stoplist)) counts[std::move(tri)] += 1;
            c.vector = vectorspace::tfidf_vector(counts, space);
            set.items.push_back(std::move(c));
        }
    };
    sample_side(pool_a, Stance::SideA, 1);
    set.n_side_a = n_per_stance;
    sample_side(pool_b, Stance::SideB, 2);
    set.n_side_b = n_per_stance;
    return set;
}

vectorspace::SparseVector build_query_vector(
    const std::vector<std::pair<std::string, std::uint32_t>>& top_trigrams,
    const vectorspace::VectorSpace& space,
    std::size_t q) {
    SparseVector v;
    const std::size_t take = std::min(q, top_trigrams.size());
    for (std::size_t i = 0; i < take; ++i) {
        const auto idx = space.vocab.index_of(top_trigrams[i].first);
        if (idx == vectorspace::Vocabulary::npos) continue;
        v.entries.emplace_back(idx, space.df.idf(idx));
    }
    std::sort(v.entries.begin(), v.entries.end());
    v.entries.erase(std::unique(v.entries.begin(), v.entries.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    v.entries.end());
    const double n = v.norm();
    if (n > 0.0) {
        for (auto& [i, w] : v.entries) w /= n;
    }
    return v;
}

std::vector<ScoredItem> score_candidates(const vectorspace::SparseVector& query,
                                         const CandidateSet& candidates,
                                         std::optional<Stance> stance_filter,
                                         const std::string& exclude_account) {
    if (query.empty()) throw std::runtime_error("score_candidates: zero query vector");

    std::vector<const Candidate*> eligible;
    eligible.reserve(candidates.items.size());
    for (const auto& c : candidates.items) {
        if (stance_filter && c.stance != *stance_filter) continue;
        if (!exclude_account.empty() && c.account_id == exclude_account) continue;
        eligible.push_back(&c);
    }

    std::vector<const SparseVector*> vectors;
    vectors.reserve(eligible.size());
    for (const auto* c : eligible) vectors.push_back(&c->vector);
    std::vector<double> scores(eligible.size());
    kernels::score_all_parallel(query, vectors, scores);

    std::vector<ScoredItem> ranked;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
        if (scores[i] > 0.0) ranked.push_back({eligible[i]->tweet_id, scores[i], eligible[i]->stance});
    }
    std::sort(ranked.begin(), ranked.end(), [](const ScoredItem& a, const ScoredItem& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.tweet_id < b.tweet_id;
    });
    return ranked;
}

std::vector<ScoredItem> hybrid_mix(const std::vector<ScoredItem>& ranked_a,
                                   const std::vector<ScoredItem>& ranked_b,
                                   std::size_t k,
                                   double ratio) {
    if (ratio < 0.0 || ratio > 1.0) throw std::runtime_error("hybrid ratio out of [0,1]");
    std::size_t n_a = static_cast<std::size_t>(
        std::llround(ratio * static_cast<double>(k)));
    n_a = std::min(n_a, k);
    std::size_t n_b = k - n_a;

    const std::size_t take_a = std::min(n_a, ranked_a.size());
    const std::size_t take_b = std::min(n_b, ranked_b.size());
    // Backfill a short side from the other side's remaining ranked items.
    const std::size_t fill_a = std::min(n_b - take_b, ranked_a.size() - take_a);
    const std::size_t fill_b = std::min(n_a - take_a, ranked_b.size() - take_b);

    std::vector<ScoredItem> out;
    out.reserve(take_a + fill_a + take_b + fill_b);
    out.insert(out.end(), ranked_a.begin(), ranked_a.begin() + static_cast<std::ptrdiff_t>(take_a + fill_a));
    out.insert(out.end(), ranked_b.begin(), ranked_b.begin() + static_cast<std::ptrdiff_t>(take_b + fill_b));
    return out;
}

RecommendationList recommend(const stance::UserProfile& user,
                             const CandidateSet& candidates,
                             Variant variant,
                             const vectorspace::VectorSpace& space,
                             std::size_t k,
                             double ratio,
                             std::size_t query_trigrams) {
    if (k < 1) throw std::runtime_error("recommend: k must be at least 1");
    const auto query = build_query_vector(user.top_trigrams, space, query_trigrams);
    if (query.empty()) {
        throw std::runtime_error("user " + user.account_id + " has no in-vocabulary top trigram");
    }

    RecommendationList list;
    list.account_id = user.account_id;
    list.variant = variant;
    list.k = k;

    auto top_k = [&](std::vector<ScoredItem> ranked) {
        if (ranked.size() > k) ranked.resize(k);
        return ranked;
    };

    switch (variant) {
        case Variant::Standard:
            list.items = top_k(score_candidates(query, candidates, std::nullopt, user.account_id));
            break;
        case Variant::SideAOnly:
            list.items = top_k(score_candidates(query, candidates, Stance::SideA, user.account_id));
            break;
        case Variant::SideBOnly:
            list.items = top_k(score_candidates(query, candidates, Stance::SideB, user.account_id));
            break;
        case Variant::Hybrid: {
            auto ranked_a = score_candidates(query, candidates, Stance::SideA, user.account_id);
            auto ranked_b = score_candidates(query, candidates, Stance::SideB, user.account_id);
            list.items = hybrid_mix(ranked_a, ranked_b, k, ratio);
            break;
        }
    }
    return list;
}

}  // namespace polarrec::recommender

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarrec/corpus.hpp"
#include "polarrec/stance.hpp"
#include "polarrec/textproc.hpp"
#include "polarrec/vectorspace.hpp"

namespace polarrec::recommender {

using filterpipe::Stance;

enum class Variant { Standard, SideAOnly, SideBOnly, Hybrid };

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

struct Candidate {
    std::string tweet_id;
    std::string account_id;  // author, for per-user exclusion
    Stance stance;
    vectorspace::SparseVector vector;  // unit length or zero
};

struct CandidateSet {
    std::vector<Candidate> items;
    std::uint64_t n_side_a = 0;
    std::uint64_t n_side_b = 0;
    std::uint64_t rng_seed = 0;
};

struct ScoredItem {
    std::string tweet_id;
    double score;
    Stance stance;
};

struct RecommendationList {
    std::string account_id;
    Variant variant;
    std::vector<ScoredItem> items;
    std::size_t k = 0;
};

// Uniform per-stance sample without replacement from the tweets of the
// classified users, deterministic given the seed; tweets vectorized in the
// shared space. Errors if a stance pool holds fewer than n_per_stance tweets.
CandidateSet sample_candidates(const corpus::Corpus& corpus,
                               const std::vector<stance::UserProfile>& profiles,
                               const textproc::StopwordSet& stoplist,
                               const vectorspace::VectorSpace& space,
                               std::uint64_t n_per_stance,
                               std::uint64_t seed);

// Query from the user's top-q trigrams, each weighted by its idf,
// L2-normalized. Zero vector if none of them is in the vocabulary.
vectorspace::SparseVector build_query_vector(
    const std::vector<std::pair<std::string, std::uint32_t>>& top_trigrams,
    const vectorspace::VectorSpace& space,
    std::size_t q = 1);

// Cosine against every candidate (restricted to stance_filter if given,
// and excluding tweets authored by exclude_account); sorted by score
// descending, ties by tweet_id ascending; zero scores excluded.
std::vector<ScoredItem> score_candidates(const vectorspace::SparseVector& query,
                                         const CandidateSet& candidates,
                                         std::optional<Stance> stance_filter = std::nullopt,
                                         const std::string& exclude_account = {});

// Round(ratio*k) items from ranked_a then the rest from ranked_b, each in
// its own order, side-A block first; a short side is backfilled from the
// other side's remaining items.
std::vector<ScoredItem> hybrid_mix(const std::vector<ScoredItem>& ranked_a,
                                   const std::vector<ScoredItem>& ranked_b,
                                   std::size_t k,
                                   double ratio);

RecommendationList recommend(const stance::UserProfile& user,
                             const CandidateSet& candidates,
                             Variant variant,
                             const vectorspace::VectorSpace& space,
                             std::size_t k = 10,
                             double ratio = 0.5,
                             std::size_t query_trigrams = 1);

}  // namespace polarrec::recommender

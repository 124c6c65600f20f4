#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polarrec/corpus.hpp"
#include "polarrec/filterpipe.hpp"
#include "polarrec/textproc.hpp"
#include "polarrec/vectorspace.hpp"

namespace polarrec::stance {

using filterpipe::Stance;

struct StanceProfile {
    Stance stance;
    vectorspace::SparseVector vector;  // unit length, nonzero
};

struct UserProfile {
    std::string account_id;
    Stance assigned_stance;
    vectorspace::SparseVector vector;  // unit length
    double sim_a = 0.0;
    double sim_b = 0.0;
    std::vector<std::pair<std::string, std::uint32_t>> top_trigrams;  // <= 15
};

struct ClassificationReport {
    std::uint64_t side_a_users = 0;
    std::uint64_t side_a_tweets = 0;
    std::uint64_t side_b_users = 0;
    std::uint64_t side_b_tweets = 0;
    std::uint64_t unclassified = 0;
    std::uint64_t flipped = 0;  // assigned stance differs from seed label
};

// Per-tweet trigram counts pooled over a list of tweets. Trigrams never
// cross tweet boundaries.
vectorspace::TrigramCounts pooled_trigram_counts(const std::vector<const corpus::Tweet*>& tweets,
                                                 const textproc::StopwordSet& stoplist);

// Stance vector from all tweets of a side's seed users; errors if the side
// yields zero in-vocabulary trigrams.
StanceProfile build_stance_vector(Stance stance,
                                  const std::vector<const corpus::Tweet*>& side_tweets,
                                  const textproc::StopwordSet& stoplist,
                                  const vectorspace::VectorSpace& space);

// User vector over the user's per-tweet trigrams; zero vector if the user
// has no in-vocabulary trigrams.
vectorspace::SparseVector build_user_vector(const std::vector<const corpus::Tweet*>& user_tweets,
                                            const textproc::StopwordSet& stoplist,
                                            const vectorspace::VectorSpace& space);

struct Classification {
    Stance stance;
    double sim_a;
    double sim_b;
};

// SideA if sim_a > sim_b, SideB if sim_b > sim_a; nullopt on an exact tie
// or a zero user vector (unclassifiable).
std::optional<Classification> classify_user(const vectorspace::SparseVector& user_vec,
                                            const StanceProfile& profile_a,
                                            const StanceProfile& profile_b);

// Raw-count ranking: descending count, ties broken lexicographically by
// trigram; at most k items.
std::vector<std::pair<std::string, std::uint32_t>> top_trigrams(
    const std::vector<const corpus::Tweet*>& user_tweets,
    const textproc::StopwordSet& stoplist,
    std::size_t k = 15);

struct ProfileResult {
    StanceProfile profile_a;
    StanceProfile profile_b;
    std::vector<UserProfile> profiles;  // sorted by account_id
    ClassificationReport report;
};

// Full pass over the filtered users: stance vectors from the seed labels,
// then per-user vectorization, classification and top-trigram extraction.
// Per-user work runs in parallel; output order is account_id order.
ProfileResult build_all_profiles(const corpus::Corpus& corpus,
                                 const std::map<std::string, Stance>& seed_labels,
                                 const textproc::StopwordSet& stoplist,
                                 const vectorspace::VectorSpace& space,
                                 std::size_t top_k = 15);

// Profile dump: one JSON record per user, the input of the recommender stage.
void save_profiles(const ProfileResult& result, const std::string& path);
ProfileResult load_profiles(const std::string& path);

}  // namespace polarrec::stance

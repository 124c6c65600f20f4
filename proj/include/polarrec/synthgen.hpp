#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polarrec::synthgen {

// Two-community corpus generator. Every knob lives here; the seed fully
// determines the output files.
struct SynthSpec {
    std::uint64_t seed = 1;
    std::uint64_t users_side_a = 100;
    std::uint64_t users_side_b = 100;
    std::uint64_t tweets_per_user_min = 10;
    std::uint64_t tweets_per_user_max = 20;
    std::uint64_t tokens_per_tweet_min = 6;
    std::uint64_t tokens_per_tweet_max = 12;
    std::uint64_t vocab_exclusive_a = 300;
    std::uint64_t vocab_exclusive_b = 300;
    std::uint64_t vocab_shared = 60;
    double zipf_a = 1.0;              // topical concentration of side A
    double zipf_b = 1.0;              // topical concentration of side B
    double zipf_shared = 1.1;
    double partisan_token_rate = 0.7;  // P(token from the side-exclusive pool)
    double hashtag_rate = 0.3;         // P(a tweet carries an own-side seed tag)
    std::vector<std::string> seed_tags_a = {"maga", "tcot", "americafirst"};
    std::vector<std::string> seed_tags_b = {"impeachtrump", "theresistance", "resist"};
    double offlang_fraction = 0.0;  // accounts generated with a non-"en" language
    // Clean account statistic ranges, uniform inclusive.
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> stat_ranges = {
        {"followers", {50, 500}},
        {"followees", {50, 500}},
        {"likes", {10, 200}},
        {"statuses", {100, 2000}},
    };
    double outlier_fraction = 0.0;

    void validate() const;
};

SynthSpec load_spec(const std::string& path);

// Sets the outlier fraction; fraction must lie in [0, 0.5). Flagged accounts
// get one statistic pushed at least 10x beyond the clean range and are
// recorded in the ground-truth file.
SynthSpec plant_outliers(SynthSpec spec, double fraction);

struct GeneratedFiles {
    std::string accounts_path;
    std::string tweets_path;
    std::string ground_truth_path;
};

// Writes accounts.jsonl, tweets.jsonl and ground_truth.tsv under out_dir.
// Byte-identical output for identical specs.
GeneratedFiles generate(const SynthSpec& spec, const std::string& out_dir);

struct GroundTruthEntry {
    char side;  // 'a' or 'b'
    bool is_outlier;
};

std::map<std::string, GroundTruthEntry> load_ground_truth(const std::string& path);

}  // namespace polarrec::synthgen

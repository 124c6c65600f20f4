#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "polarrec/corpus.hpp"

namespace polarrec::filterpipe {

enum class SeedLabel { SideA, SideB, Both, None };

enum class Stance { SideA, SideB };

inline const char* stance_name(Stance s) { return s == Stance::SideA ? "side_a" : "side_b"; }

struct HashtagConfig {
    std::set<std::string> side_a_tags;
    std::set<std::string> side_b_tags;

    // Both sets nonempty and disjoint; throws otherwise.
    void validate() const;
};

struct StageReport {
    std::uint64_t input_accounts = 0;
    std::uint64_t single_group = 0;
    std::uint64_t quartile = 0;
    std::uint64_t language = 0;
};

// Seed label from the union of the account's hashtags against the two
// configured tag sets.
SeedLabel seed_classify(const std::vector<const corpus::Tweet*>& account_tweets,
                        const HashtagConfig& config);

// Account ids whose seed label is SideA or SideB; Both and None dropped.
std::map<std::string, Stance> single_group_filter(const corpus::Corpus& corpus,
                                                  const HashtagConfig& config);

// Type-7 quantile (linear interpolation between order statistics) over a
// sorted sample; p in [0,1].
double quantile(std::vector<double> values, double p);

// Keeps an account iff each of {followers, followees, likes, statuses} lies
// in [Q1, Q3] inclusive, quartiles computed independently per statistic over
// the input list. Requires at least 4 accounts.
std::vector<corpus::Account> quartile_filter(const std::vector<corpus::Account>& accounts);

// Keeps accounts whose user_language equals lang exactly.
std::vector<corpus::Account> language_filter(const std::vector<corpus::Account>& accounts,
                                             const std::string& lang);

struct PipelineResult {
    std::map<std::string, Stance> survivors;  // account id -> seed stance
    StageReport report;
};

// single-group -> quartile -> language, in that order.
PipelineResult run_filter_pipeline(const corpus::Corpus& corpus,
                                   const HashtagConfig& config,
                                   const std::string& lang);

}  // namespace polarrec::filterpipe

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polarrec/filterpipe.hpp"

namespace polarrec::config {

// Run configuration: paths plus all tunables. Defaults are the reference
// constants (k=10, 50k candidates per stance, ratio 0.5, one query trigram,
// 1,500 evaluation users per stance, language "en").
struct RunConfig {
    std::string accounts_path;
    std::string tweets_path;
    std::string stopwords_path;
    std::string out_dir = ".";
    filterpipe::HashtagConfig hashtags;
    std::string language = "en";
    std::uint32_t min_df = 1;
    std::uint64_t n_per_stance = 50'000;
    std::size_t k = 10;
    double ratio = 0.5;
    std::size_t query_trigrams = 1;
    std::uint64_t n_users_per_stance = 1'500;
    std::uint64_t seed = 1;
    bool lenient = false;

    void validate() const;
};

RunConfig load_config(const std::string& path);

}  // namespace polarrec::config

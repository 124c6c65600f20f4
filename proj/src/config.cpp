#include "polarrec/config.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace polarrec::config {

using nlohmann::json;

void RunConfig::validate() const {
    if (accounts_path.empty() || tweets_path.empty() || stopwords_path.empty()) {
        throw std::runtime_error("config: accounts, tweets and stopwords paths are required");
    }
    hashtags.validate();
    if (k < 1) throw std::runtime_error("config: k must be >= 1");
    if (ratio < 0.0 || ratio > 1.0) throw std::runtime_error("config: ratio must lie in [0,1]");
    if (query_trigrams < 1) throw std::runtime_error("config: query_trigrams must be >= 1");
    if (min_df < 1) throw std::runtime_error("config: min_df must be >= 1");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed config " + path + ": " + e.what());
    }
    RunConfig cfg;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("accounts", cfg.accounts_path);
    get("tweets", cfg.tweets_path);
    get("stopwords", cfg.stopwords_path);
    get("out_dir", cfg.out_dir);
    if (j.contains("side_a_tags")) {
        for (const auto& t : j.at("side_a_tags")) {
            cfg.hashtags.side_a_tags.insert(t.get<std::string>());
        }
    }
    if (j.contains("side_b_tags")) {
        for (const auto& t : j.at("side_b_tags")) {
            cfg.hashtags.side_b_tags.insert(t.get<std::string>());
        }
    }
    get("language", cfg.language);
    get("min_df", cfg.min_df);
    get("n_per_stance", cfg.n_per_stance);
    get("k", cfg.k);
    get("ratio", cfg.ratio);
    get("query_trigrams", cfg.query_trigrams);
    get("n_users_per_stance", cfg.n_users_per_stance);
    get("seed", cfg.seed);
    get("lenient", cfg.lenient);
    cfg.validate();
    return cfg;
}

}  // namespace polarrec::config

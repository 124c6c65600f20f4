#include "polarrec/filterpipe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polarrec::filterpipe {

void HashtagConfig::validate() const {
    if (side_a_tags.empty() || side_b_tags.empty()) {
        throw std::runtime_error("hashtag config: both tag sets must be nonempty");
    }
    for (const auto& t : side_a_tags) {
        if (side_b_tags.count(t)) {
            throw std::runtime_error("hashtag config: tag \"" + t + "\" appears on both sides");
        }
    }
}

SeedLabel seed_classify(const std::vector<const corpus::Tweet*>& account_tweets,
                        const HashtagConfig& config) {
    bool hits_a = false;
    bool hits_b = false;
    for (const auto* tweet : account_tweets) {
        for (const auto& tag : tweet->hashtags) {
            if (config.side_a_tags.count(tag)) hits_a = true;
            if (config.side_b_tags.count(tag)) hits_b = true;
        }
        if (hits_a && hits_b) break;
    }
    if (hits_a && hits_b) return SeedLabel::Both;
    if (hits_a) return SeedLabel::SideA;
    if (hits_b) return SeedLabel::SideB;
    return SeedLabel::None;
}

std::map<std::string, Stance> single_group_filter(const corpus::Corpus& corpus,
                                                  const HashtagConfig& config) {
    std::map<std::string, Stance> kept;
    for (const auto& [account_id, account] : corpus.accounts) {
        std::vector<const corpus::Tweet*> tweets;
        auto it = corpus.tweets_by_account.find(account_id);
        if (it != corpus.tweets_by_account.end()) {
            tweets.reserve(it->second.size());
            for (const auto& tid : it->second) tweets.push_back(&corpus.tweets.at(tid));
        }
        switch (seed_classify(tweets, config)) {
            case SeedLabel::SideA:
                kept.emplace(account_id, Stance::SideA);
                break;
            case SeedLabel::SideB:
                kept.emplace(account_id, Stance::SideB);
                break;
            default:
                break;
        }
    }
    return kept;
}

double quantile(std::vector<double> values, double p) {
    if (values.empty()) throw std::runtime_error("quantile of empty sample");
    std::sort(values.begin(), values.end());
    const double h = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= values.size()) return values.back();
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

std::vector<corpus::Account> quartile_filter(const std::vector<corpus::Account>& accounts) {
    if (accounts.size() < 4) {
        throw std::runtime_error("quartile filter needs at least 4 accounts, got " +
                                 std::to_string(accounts.size()));
    }
    const auto stats = {&corpus::Account::followers, &corpus::Account::followees,
                        &corpus::Account::likes, &corpus::Account::statuses};
    std::vector<std::pair<double, double>> bounds;
    for (auto stat : stats) {
        std::vector<double> values;
        values.reserve(accounts.size());
        for (const auto& a : accounts) values.push_back(static_cast<double>(a.*stat));
        bounds.emplace_back(quantile(values, 0.25), quantile(values, 0.75));
    }
    std::vector<corpus::Account> kept;
    for (const auto& a : accounts) {
        bool in_range = true;
        std::size_t i = 0;
        for (auto stat : stats) {
            const double v = static_cast<double>(a.*stat);
            if (v < bounds[i].first || v > bounds[i].second) {
                in_range = false;
                break;
            }
            ++i;
        }
        if (in_range) kept.push_back(a);
    }
    return kept;
}

std::vector<corpus::Account> language_filter(const std::vector<corpus::Account>& accounts,
                                             const std::string& lang) {
    std::vector<corpus::Account> kept;
    for (const auto& a : accounts) {
        if (a.user_language == lang) kept.push_back(a);
    }
    return kept;
}

PipelineResult run_filter_pipeline(const corpus::Corpus& corpus,
                                   const HashtagConfig& config,
                                   const std::string& lang) {
    config.validate();
    PipelineResult result;
    result.report.input_accounts = corpus.accounts.size();

    auto seeded = single_group_filter(corpus, config);
    result.report.single_group = seeded.size();

    std::vector<corpus::Account> pool;
    pool.reserve(seeded.size());
    for (const auto& [id, stance] : seeded) pool.push_back(corpus.accounts.at(id));

    auto after_quartile = quartile_filter(pool);
    result.report.quartile = after_quartile.size();

    auto after_language = language_filter(after_quartile, lang);
    result.report.language = after_language.size();

    for (const auto& a : after_language) {
        result.survivors.emplace(a.account_id, seeded.at(a.account_id));
    }
    return result;
}

}  // namespace polarrec::filterpipe

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "polarrec/filterpipe.hpp"
#include "test_util.hpp"

using namespace polarrec;
using namespace polarrec::filterpipe;
using polarrec::corpus::Account;

namespace {

HashtagConfig test_config() {
    return {{"maga", "tcot"}, {"impeachtrump", "resist"}};
}

corpus::Tweet tweet_with_tags(std::set<std::string> tags) {
    corpus::Tweet t;
    t.hashtags = std::move(tags);
    return t;
}

// Sort-based reference quantile (type 7).
double oracle_quantile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    const double h = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    const double frac = h - static_cast<double>(lo);
    if (lo + 1 >= v.size()) return v.back();
    return v[lo] * (1.0 - frac) + v[lo + 1] * frac;
}

}  // namespace

TEST_CASE("hashtag config validation") {
    CHECK_NOTHROW(test_config().validate());
    CHECK_THROWS_AS((HashtagConfig{{}, {"x"}}.validate()), std::runtime_error);
    CHECK_THROWS_AS((HashtagConfig{{"x"}, {"x", "y"}}.validate()), std::runtime_error);
}

TEST_CASE("seed_classify") {
    const auto cfg = test_config();
    auto t_a = tweet_with_tags({"maga"});
    auto t_b = tweet_with_tags({"impeachtrump"});
    auto t_both = tweet_with_tags({"maga", "resist"});
    auto t_none = tweet_with_tags({"cats"});
    CHECK(seed_classify({&t_a}, cfg) == SeedLabel::SideA);
    CHECK(seed_classify({&t_b}, cfg) == SeedLabel::SideB);
    CHECK(seed_classify({&t_both}, cfg) == SeedLabel::Both);
    CHECK(seed_classify({&t_a, &t_b}, cfg) == SeedLabel::Both);
    CHECK(seed_classify({&t_none}, cfg) == SeedLabel::None);
    CHECK(seed_classify({}, cfg) == SeedLabel::None);
}

TEST_CASE("single_group_filter keeps only single-side accounts") {
    const auto corpus = testutil::make_corpus(
        {testutil::make_account("u1"), testutil::make_account("u2"), testutil::make_account("u3"),
         testutil::make_account("u4")},
        {{"u1", "go #maga"},
         {"u2", "#resist now"},
         {"u3", "#maga and #resist"},
         {"u4", "no tags"}});
    const auto kept = single_group_filter(corpus, test_config());
    REQUIRE(kept.size() == 2);
    CHECK(kept.at("u1") == Stance::SideA);
    CHECK(kept.at("u2") == Stance::SideB);
}

TEST_CASE("single_group_filter matches a per-account brute-force check") {
    std::mt19937_64 gen(11);
    std::vector<Account> accounts;
    std::vector<std::pair<std::string, std::string>> tweets;
    const std::vector<std::string> tags = {"#maga", "#tcot", "#resist", "#impeachtrump", "#other"};
    for (int u = 0; u < 10; ++u) {
        const std::string id = "u" + std::to_string(u);
        accounts.push_back(testutil::make_account(id));
        for (int t = 0; t < 3; ++t) {
            tweets.emplace_back(id, "text " + tags[gen() % tags.size()]);
        }
    }
    const auto corpus = testutil::make_corpus(accounts, tweets);
    const auto cfg = test_config();
    const auto kept = single_group_filter(corpus, cfg);
    for (const auto& a : accounts) {
        std::vector<const corpus::Tweet*> account_tweets;
        for (const auto& tid : corpus.tweets_by_account.at(a.account_id)) {
            account_tweets.push_back(&corpus.tweets.at(tid));
        }
        const auto label = seed_classify(account_tweets, cfg);
        const bool expect_kept = label == SeedLabel::SideA || label == SeedLabel::SideB;
        CHECK(kept.count(a.account_id) == (expect_kept ? 1u : 0u));
    }
}

TEST_CASE("quartile_filter follows the interpolated quartiles") {
    std::vector<Account> accounts;
    for (std::uint64_t f = 1; f <= 8; ++f) {
        accounts.push_back({"u" + std::to_string(f), f, 10, 10, 10, "en"});
    }
    // followers 1..8: Q1 = 2.75, Q3 = 6.25 -> keep followers {3,4,5,6}
    const auto kept = quartile_filter(accounts);
    REQUIRE(kept.size() == 4);
    for (const auto& a : kept) {
        CHECK(a.followers >= 3);
        CHECK(a.followers <= 6);
    }
}

TEST_CASE("quartile_filter keeps everyone when stats are identical") {
    std::vector<Account> accounts(5, testutil::make_account("x"));
    CHECK(quartile_filter(accounts).size() == 5);
}

TEST_CASE("quartile_filter drops on any out-of-range stat") {
    std::vector<Account> accounts;
    for (std::uint64_t i = 1; i <= 8; ++i) {
        accounts.push_back(
            {"u" + std::to_string(i), 10, 10, 10, i == 4 ? 100000ull : 10ull, "en"});
    }
    const auto kept = quartile_filter(accounts);
    for (const auto& a : kept) CHECK(a.account_id != "u4");
}

TEST_CASE("quartile_filter needs at least 4 accounts") {
    CHECK_THROWS_AS(quartile_filter({testutil::make_account("a")}), std::runtime_error);
}

TEST_CASE("quartile_filter is permutation invariant and matches the oracle") {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Account> accounts;
        const std::size_t n = 4 + gen() % 30;
        for (std::size_t i = 0; i < n; ++i) {
            accounts.push_back({"u" + std::to_string(i), gen() % 1000, gen() % 1000, gen() % 1000,
                                gen() % 1000, "en"});
        }
        const auto kept = quartile_filter(accounts);

        // oracle: recompute bounds per stat, filter by hand
        std::vector<std::vector<double>> columns(4);
        for (const auto& a : accounts) {
            columns[0].push_back(static_cast<double>(a.followers));
            columns[1].push_back(static_cast<double>(a.followees));
            columns[2].push_back(static_cast<double>(a.likes));
            columns[3].push_back(static_cast<double>(a.statuses));
        }
        std::set<std::string> expected;
        for (const auto& a : accounts) {
            const double vals[4] = {static_cast<double>(a.followers),
                                    static_cast<double>(a.followees),
                                    static_cast<double>(a.likes),
                                    static_cast<double>(a.statuses)};
            bool ok = true;
            for (int s = 0; s < 4; ++s) {
                if (vals[s] < oracle_quantile(columns[s], 0.25) ||
                    vals[s] > oracle_quantile(columns[s], 0.75)) {
                    ok = false;
                }
            }
            if (ok) expected.insert(a.account_id);
        }
        std::set<std::string> got;
        for (const auto& a : kept) got.insert(a.account_id);
        CHECK(got == expected);

        auto shuffled = accounts;
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        std::set<std::string> got_shuffled;
        for (const auto& a : quartile_filter(shuffled)) got_shuffled.insert(a.account_id);
        CHECK(got_shuffled == got);
    }
}

TEST_CASE("language_filter") {
    std::vector<Account> accounts = {testutil::make_account("a", 1, "en"),
                                     testutil::make_account("b", 1, "de"),
                                     testutil::make_account("c", 1, "en")};
    CHECK(language_filter(accounts, "en").size() == 2);
    CHECK(language_filter({}, "en").empty());
}

TEST_CASE("run_filter_pipeline composes the three stages in order") {
    std::mt19937_64 gen(23);
    std::vector<Account> accounts;
    std::vector<std::pair<std::string, std::string>> tweets;
    for (int u = 0; u < 100; ++u) {
        const std::string id = "u" + std::to_string(u);
        accounts.push_back({id, gen() % 500, gen() % 500, gen() % 500, gen() % 500,
                            (u % 10 == 0) ? "de" : "en"});
        const char* tag = (u % 3 == 0) ? "#maga" : ((u % 3 == 1) ? "#resist" : "#maga #resist");
        tweets.emplace_back(id, std::string("hello ") + tag);
    }
    const auto corpus = testutil::make_corpus(accounts, tweets);
    const auto cfg = test_config();
    const auto result = run_filter_pipeline(corpus, cfg, "en");

    CHECK(result.report.single_group >= result.report.quartile);
    CHECK(result.report.quartile >= result.report.language);
    CHECK(result.survivors.size() == result.report.language);

    // stage-by-stage oracle
    const auto seeded = single_group_filter(corpus, cfg);
    CHECK(seeded.size() == result.report.single_group);
    std::vector<Account> pool;
    for (const auto& [id, stance] : seeded) pool.push_back(corpus.accounts.at(id));
    const auto q = quartile_filter(pool);
    CHECK(q.size() == result.report.quartile);
    const auto l = language_filter(q, "en");
    CHECK(l.size() == result.report.language);
    for (const auto& a : l) CHECK(result.survivors.count(a.account_id) == 1);
}

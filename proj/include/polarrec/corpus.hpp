#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace polarrec::corpus {

struct Account {
    std::string account_id;
    std::uint64_t followers = 0;
    std::uint64_t followees = 0;
    std::uint64_t likes = 0;
    std::uint64_t statuses = 0;
    std::string user_language;  // lowercase ISO-639-1

    bool operator==(const Account&) const = default;
};

struct Tweet {
    std::string tweet_id;
    std::string account_id;
    std::string text;
    std::set<std::string> hashtags;  // lowercase, '#'-free

    bool operator==(const Tweet&) const = default;
};

struct Corpus {
    std::map<std::string, Account> accounts;
    std::map<std::string, Tweet> tweets;
    std::map<std::string, std::vector<std::string>> tweets_by_account;  // file order
    std::uint64_t skipped_tweets = 0;  // lenient-mode skip counter

    bool operator==(const Corpus&) const = default;
};

// Each maximal run of word characters following '#', lowercased; empty
// tags excluded.
std::set<std::string> extract_hashtags(const std::string& text);

// One JSON object per line: {id, followers, followees, likes, statuses, lang}.
// Duplicate ids and malformed records are errors (with line numbers).
std::map<std::string, Account> load_accounts(const std::string& path);

// One JSON object per line: {id, account, text, hashtags?}. If hashtags is
// absent it is derived from text via extract_hashtags. Tweets referencing an
// unknown account are an error in strict mode, skipped (and counted) in
// lenient mode.
Corpus load_tweets(const std::string& path,
                   std::map<std::string, Account> accounts,
                   bool lenient = false);

void save_accounts(const Corpus& corpus, const std::string& path);
void save_tweets(const Corpus& corpus, const std::string& path);

}  // namespace polarrec::corpus

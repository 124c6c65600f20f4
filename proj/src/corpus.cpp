#include "polarrec/corpus.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace polarrec::corpus {

using nlohmann::json;

namespace {

bool is_word_char(unsigned char c) {
    return std::isalnum(c) || c == '_';
}

[[noreturn]] void fail_line(const std::string& path, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + what);
}

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::set<std::string> extract_hashtags(const std::string& text) {
    std::set<std::string> tags;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#') {
            ++i;
            std::string tag;
            while (i < text.size() && is_word_char(static_cast<unsigned char>(text[i]))) {
                tag.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
                ++i;
            }
            if (!tag.empty()) tags.insert(tag);
        } else {
            ++i;
        }
    }
    return tags;
}

std::map<std::string, Account> load_accounts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open account file: " + path);
    std::map<std::string, Account> accounts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::parse_error& e) {
            fail_line(path, line_no, std::string("malformed account record: ") + e.what());
        }
        Account a;
        try {
            a.account_id = rec.at("id").get<std::string>();
            a.followers = rec.at("followers").get<std::uint64_t>();
            a.followees = rec.at("followees").get<std::uint64_t>();
            a.likes = rec.at("likes").get<std::uint64_t>();
            a.statuses = rec.at("statuses").get<std::uint64_t>();
            a.user_language = lower(rec.at("lang").get<std::string>());
        } catch (const json::exception& e) {
            fail_line(path, line_no, std::string("malformed account record: ") + e.what());
        }
        if (accounts.count(a.account_id)) {
            fail_line(path, line_no, "duplicate account id \"" + a.account_id + "\"");
        }
        accounts.emplace(a.account_id, std::move(a));
    }
    return accounts;
}

Corpus load_tweets(const std::string& path,
                   std::map<std::string, Account> accounts,
                   bool lenient) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tweet file: " + path);
    Corpus corpus;
    corpus.accounts = std::move(accounts);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::parse_error& e) {
            fail_line(path, line_no, std::string("malformed tweet record: ") + e.what());
        }
        Tweet t;
        try {
            t.tweet_id = rec.at("id").get<std::string>();
            t.account_id = rec.at("account").get<std::string>();
            t.text = rec.at("text").get<std::string>();
            if (rec.contains("hashtags")) {
                for (const auto& h : rec.at("hashtags")) {
                    t.hashtags.insert(lower(h.get<std::string>()));
                }
            } else {
                t.hashtags = extract_hashtags(t.text);
            }
        } catch (const json::exception& e) {
            fail_line(path, line_no, std::string("malformed tweet record: ") + e.what());
        }
        if (corpus.tweets.count(t.tweet_id)) {
            fail_line(path, line_no, "duplicate tweet id \"" + t.tweet_id + "\"");
        }
        if (!corpus.accounts.count(t.account_id)) {
            if (lenient) {
                ++corpus.skipped_tweets;
                continue;
            }
            fail_line(path, line_no, "tweet references unknown account \"" + t.account_id + "\"");
        }
        corpus.tweets_by_account[t.account_id].push_back(t.tweet_id);
        corpus.tweets.emplace(t.tweet_id, std::move(t));
    }
    return corpus;
}

void save_accounts(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write account file: " + path);
    for (const auto& [id, a] : corpus.accounts) {
        json rec{{"id", a.account_id},     {"followers", a.followers},
                 {"followees", a.followees}, {"likes", a.likes},
                 {"statuses", a.statuses},   {"lang", a.user_language}};
        out << rec.dump() << '\n';
    }
}

void save_tweets(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write tweet file: " + path);
    for (const auto& [account_id, tweet_ids] : corpus.tweets_by_account) {
        for (const auto& tid : tweet_ids) {
            const Tweet& t = corpus.tweets.at(tid);
            json rec{{"id", t.tweet_id},
                     {"account", t.account_id},
                     {"text", t.text},
                     {"hashtags", t.hashtags}};
            out << rec.dump() << '\n';
        }
    }
}

}  // namespace polarrec::corpus

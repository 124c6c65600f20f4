#include "polarrec/synthgen.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "polarrec/rng.hpp"

namespace polarrec::synthgen {

using nlohmann::json;

void SynthSpec::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::runtime_error(std::string("invalid synth spec: ") + what);
    };
    require(users_side_a >= 1 && users_side_b >= 1, "users per side must be >= 1");
    require(tweets_per_user_min >= 1 && tweets_per_user_min <= tweets_per_user_max,
            "tweets_per_user range");
    require(tokens_per_tweet_min >= 1 && tokens_per_tweet_min <= tokens_per_tweet_max,
            "tokens_per_tweet range");
    require(vocab_exclusive_a >= 1 && vocab_exclusive_b >= 1 && vocab_shared >= 1,
            "vocabulary sizes must be >= 1");
    require(partisan_token_rate >= 0.0 && partisan_token_rate <= 1.0, "partisan_token_rate");
    require(hashtag_rate >= 0.0 && hashtag_rate <= 1.0, "hashtag_rate");
    require(offlang_fraction >= 0.0 && offlang_fraction <= 1.0, "offlang_fraction");
    require(outlier_fraction >= 0.0 && outlier_fraction < 0.5, "outlier_fraction");
    require(!seed_tags_a.empty() && !seed_tags_b.empty(), "seed tag lists must be nonempty");
    require(stat_ranges.size() == 4, "stat_ranges must cover the four statistics");
    for (const auto& [name, range] : stat_ranges) {
        require(range.first <= range.second, "stat range min <= max");
    }
}

SynthSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open synth spec: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed synth spec " + path + ": " + e.what());
    }
    SynthSpec spec;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("seed", spec.seed);
    get("users_side_a", spec.users_side_a);
    get("users_side_b", spec.users_side_b);
    get("tweets_per_user_min", spec.tweets_per_user_min);
    get("tweets_per_user_max", spec.tweets_per_user_max);
    get("tokens_per_tweet_min", spec.tokens_per_tweet_min);
    get("tokens_per_tweet_max", spec.tokens_per_tweet_max);
    get("vocab_exclusive_a", spec.vocab_exclusive_a);
    get("vocab_exclusive_b", spec.vocab_exclusive_b);
    get("vocab_shared", spec.vocab_shared);
    get("zipf_a", spec.zipf_a);
    get("zipf_b", spec.zipf_b);
    get("zipf_shared", spec.zipf_shared);
    get("partisan_token_rate", spec.partisan_token_rate);
    get("hashtag_rate", spec.hashtag_rate);
    get("seed_tags_a", spec.seed_tags_a);
    get("seed_tags_b", spec.seed_tags_b);
    get("offlang_fraction", spec.offlang_fraction);
    get("outlier_fraction", spec.outlier_fraction);
    if (j.contains("stat_ranges")) {
        for (const auto& [name, range] : j.at("stat_ranges").items()) {
            spec.stat_ranges[name] = {range.at(0).get<std::uint64_t>(),
                                      range.at(1).get<std::uint64_t>()};
        }
    }
    spec.validate();
    return spec;
}

SynthSpec plant_outliers(SynthSpec spec, double fraction) {
    if (fraction < 0.0 || fraction >= 0.5) {
        throw std::runtime_error("outlier fraction must lie in [0, 0.5)");
    }
    spec.outlier_fraction = fraction;
    return spec;
}

namespace {

std::string word(const char* prefix, std::size_t rank) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%04zu", prefix, rank);
    return buf;
}

}  // namespace

GeneratedFiles generate(const SynthSpec& spec, const std::string& out_dir) {
    spec.validate();
    std::filesystem::create_directories(out_dir);
    GeneratedFiles files{out_dir + "/accounts.jsonl", out_dir + "/tweets.jsonl",
                         out_dir + "/ground_truth.tsv"};
    std::ofstream accounts_out(files.accounts_path);
    std::ofstream tweets_out(files.tweets_path);
    std::ofstream truth_out(files.ground_truth_path);
    if (!accounts_out || !tweets_out || !truth_out) {
        throw std::runtime_error("cannot write synth output under " + out_dir);
    }

    std::mt19937_64 gen(rng::derive_seed(spec.seed, 0x73796e74));
    const rng::ZipfSampler zipf_a(spec.vocab_exclusive_a, spec.zipf_a);
    const rng::ZipfSampler zipf_b(spec.vocab_exclusive_b, spec.zipf_b);
    const rng::ZipfSampler zipf_shared(spec.vocab_shared, spec.zipf_shared);

    const std::uint64_t n_total = spec.users_side_a + spec.users_side_b;
    const auto n_outliers =
        static_cast<std::size_t>(spec.outlier_fraction * static_cast<double>(n_total));
    const auto n_offlang =
        static_cast<std::size_t>(spec.offlang_fraction * static_cast<double>(n_total));
    std::vector<bool> outlier_flag(n_total, false);
    for (auto idx :
         rng::sample_without_replacement(gen, static_cast<std::size_t>(n_total), n_outliers)) {
        outlier_flag[idx] = true;
    }
    std::vector<bool> offlang_flag(n_total, false);
    for (auto idx :
         rng::sample_without_replacement(gen, static_cast<std::size_t>(n_total), n_offlang)) {
        offlang_flag[idx] = true;
    }

    truth_out << "account_id\tside\tis_outlier\n";

    std::uint64_t user_index = 0;
    for (char side : {'a', 'b'}) {
        const std::uint64_t n_users = (side == 'a') ? spec.users_side_a : spec.users_side_b;
        const auto& own_zipf = (side == 'a') ? zipf_a : zipf_b;
        const char* own_prefix = (side == 'a') ? "pa" : "pb";
        const auto& own_tags = (side == 'a') ? spec.seed_tags_a : spec.seed_tags_b;

        for (std::uint64_t u = 0; u < n_users; ++u, ++user_index) {
            char idbuf[32];
            std::snprintf(idbuf, sizeof(idbuf), "%c%05llu", side,
                          static_cast<unsigned long long>(u));
            const std::string account_id = idbuf;
            const bool is_outlier = outlier_flag[user_index];

            json account{{"id", account_id}};
            for (const char* stat : {"followers", "followees", "likes", "statuses"}) {
                const auto [lo, hi] = spec.stat_ranges.at(stat);
                account[stat] = lo + rng::bounded(gen, hi - lo + 1);
            }
            if (is_outlier) {
                // One statistic pushed 10x beyond the clean maximum.
                const char* stats[] = {"followers", "followees", "likes", "statuses"};
                const char* chosen = stats[rng::bounded(gen, 4)];
                account[chosen] = spec.stat_ranges.at(chosen).second * 10 + 1;
            }
            account["lang"] = offlang_flag[user_index] ? "de" : "en";
            accounts_out << account.dump() << '\n';

            const std::uint64_t n_tweets =
                spec.tweets_per_user_min +
                rng::bounded(gen, spec.tweets_per_user_max - spec.tweets_per_user_min + 1);
            for (std::uint64_t t = 0; t < n_tweets; ++t) {
                const std::uint64_t n_tokens =
                    spec.tokens_per_tweet_min +
                    rng::bounded(gen, spec.tokens_per_tweet_max - spec.tokens_per_tweet_min + 1);
                std::string text;
                for (std::uint64_t tok = 0; tok < n_tokens; ++tok) {
                    if (!text.empty()) text += ' ';
                    if (rng::uniform01(gen) < spec.partisan_token_rate) {
                        text += word(own_prefix, own_zipf(gen));
                    } else {
                        text += word("sh", zipf_shared(gen));
                    }
                }
                if (rng::uniform01(gen) < spec.hashtag_rate) {
                    text += " #" + own_tags[rng::bounded(gen, own_tags.size())];
                }
                char tidbuf[48];
                std::snprintf(tidbuf, sizeof(tidbuf), "%s_t%04llu", account_id.c_str(),
                              static_cast<unsigned long long>(t));
                json tweet{{"id", tidbuf}, {"account", account_id}, {"text", text}};
                tweets_out << tweet.dump() << '\n';
            }

            truth_out << account_id << '\t' << side << '\t' << (is_outlier ? 1 : 0) << '\n';
        }
    }
    return files;
}

std::map<std::string, GroundTruthEntry> load_ground_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ground truth file: " + path);
    std::map<std::string, GroundTruthEntry> truth;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string id, side, outlier;
        if (!std::getline(row, id, '\t') || !std::getline(row, side, '\t') ||
            !std::getline(row, outlier, '\t')) {
            throw std::runtime_error("malformed ground truth line: " + line);
        }
        truth[id] = GroundTruthEntry{side.at(0), outlier == "1"};
    }
    return truth;
}

}  // namespace polarrec::synthgen

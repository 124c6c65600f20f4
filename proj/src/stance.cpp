#include "polarrec/stance.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace polarrec::stance {

using nlohmann::json;
using vectorspace::SparseVector;
using vectorspace::TrigramCounts;

vectorspace::TrigramCounts pooled_trigram_counts(const std::vector<const corpus::Tweet*>& tweets,
                                                 const textproc::StopwordSet& stoplist) {
    TrigramCounts counts;
    for (const auto* tweet : tweets) {
        for (auto& trigram : textproc::text_to_trigrams(tweet->text, stoplist)) {
            counts[std::move(trigram)] += 1;
        }
    }
    return counts;
}

StanceProfile build_stance_vector(Stance stance,
                                  const std::vector<const corpus::Tweet*>& side_tweets,
                                  const textproc::StopwordSet& stoplist,
                                  const vectorspace::VectorSpace& space) {
    const auto counts = pooled_trigram_counts(side_tweets, stoplist);
    auto vec = vectorspace::tfidf_vector(counts, space);
    if (vec.empty()) {
        throw std::runtime_error(std::string("stance side ") + filterpipe::stance_name(stance) +
                                 " yields no in-vocabulary trigrams");
    }
    return {stance, std::move(vec)};
}

vectorspace::SparseVector build_user_vector(const std::vector<const corpus::Tweet*>& user_tweets,
                                            const textproc::StopwordSet& stoplist,
                                            const vectorspace::VectorSpace& space) {
    return vectorspace::tfidf_vector(pooled_trigram_counts(user_tweets, stoplist), space);
}

std::optional<Classification> classify_user(const vectorspace::SparseVector& user_vec,
                                            const StanceProfile& profile_a,
                                            const StanceProfile& profile_b) {
    if (user_vec.empty()) return std::nullopt;
    const double sim_a = vectorspace::cosine(user_vec, profile_a.vector);
    const double sim_b = vectorspace::cosine(user_vec, profile_b.vector);
    if (sim_a == sim_b) return std::nullopt;
    return Classification{sim_a > sim_b ? Stance::SideA : Stance::SideB, sim_a, sim_b};
}

std::vector<std::pair<std::string, std::uint32_t>> top_trigrams(
    const std::vector<const corpus::Tweet*>& user_tweets,
    const textproc::StopwordSet& stoplist,
    std::size_t k) {
    const auto counts = pooled_trigram_counts(user_tweets, stoplist);
    std::vector<std::pair<std::string, std::uint32_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

ProfileResult build_all_profiles(const corpus::Corpus& corpus,
                                 const std::map<std::string, Stance>& seed_labels,
                                 const textproc::StopwordSet& stoplist,
                                 const vectorspace::VectorSpace& space,
                                 std::size_t top_k) {
    auto tweets_of = [&](const std::string& account_id) {
        std::vector<const corpus::Tweet*> tweets;
        auto it = corpus.tweets_by_account.find(account_id);
        if (it != corpus.tweets_by_account.end()) {
            tweets.reserve(it->second.size());
            for (const auto& tid : it->second) tweets.push_back(&corpus.tweets.at(tid));
        }
        return tweets;
    };

    std::vector<const corpus::Tweet*> side_a_tweets;
    std::vector<const corpus::Tweet*> side_b_tweets;
    std::uint64_t seed_a = 0, seed_b = 0;
    for (const auto& [id, label] : seed_labels) {
        auto tweets = tweets_of(id);
        auto& pool = (label == Stance::SideA) ? side_a_tweets : side_b_tweets;
        (label == Stance::SideA ? seed_a : seed_b) += 1;
        pool.insert(pool.end(), tweets.begin(), tweets.end());
    }
    if (seed_a == 0 || seed_b == 0) {
        throw std::runtime_error("a stance side has zero seed users");
    }

    ProfileResult result;
    result.profile_a = build_stance_vector(Stance::SideA, side_a_tweets, stoplist, space);
    result.profile_b = build_stance_vector(Stance::SideB, side_b_tweets, stoplist, space);

    std::vector<const std::pair<const std::string, Stance>*> users;
    users.reserve(seed_labels.size());
    for (const auto& kv : seed_labels) users.push_back(&kv);

    const auto n = static_cast<std::int64_t>(users.size());
    std::vector<std::optional<UserProfile>> slots(users.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& [account_id, seed] = *users[static_cast<std::size_t>(i)];
        const auto tweets = tweets_of(account_id);
        auto vec = build_user_vector(tweets, stoplist, space);
        const auto cls = classify_user(vec, result.profile_a, result.profile_b);
        if (!cls) continue;
        UserProfile p;
        p.account_id = account_id;
        p.assigned_stance = cls->stance;
        p.vector = std::move(vec);
        p.sim_a = cls->sim_a;
        p.sim_b = cls->sim_b;
        p.top_trigrams = top_trigrams(tweets, stoplist, top_k);
        slots[static_cast<std::size_t>(i)] = std::move(p);
    }

    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) {
            result.report.unclassified += 1;
            continue;
        }
        UserProfile& p = *slots[i];
        const auto n_tweets = tweets_of(p.account_id).size();
        if (p.assigned_stance == Stance::SideA) {
            result.report.side_a_users += 1;
            result.report.side_a_tweets += n_tweets;
        } else {
            result.report.side_b_users += 1;
            result.report.side_b_tweets += n_tweets;
        }
        if (p.assigned_stance != users[i]->second) result.report.flipped += 1;
        result.profiles.push_back(std::move(p));
    }
    return result;
}

namespace {

json vector_to_json(const SparseVector& v) {
    json arr = json::array();
    for (const auto& [i, w] : v.entries) arr.push_back(json::array({i, w}));
    return arr;
}

SparseVector vector_from_json(const json& arr) {
    SparseVector v;
    for (const auto& e : arr) {
        v.entries.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<double>());
    }
    return v;
}

Stance stance_from_name(const std::string& name) {
    if (name == "side_a") return Stance::SideA;
    if (name == "side_b") return Stance::SideB;
    throw std::runtime_error("unknown stance name: " + name);
}

}  // namespace

void save_profiles(const ProfileResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write profile file: " + path);
    json meta{{"type", "report"},
              {"side_a_users", result.report.side_a_users},
              {"side_a_tweets", result.report.side_a_tweets},
              {"side_b_users", result.report.side_b_users},
              {"side_b_tweets", result.report.side_b_tweets},
              {"unclassified", result.report.unclassified},
              {"flipped", result.report.flipped}};
    out << meta.dump() << '\n';
    for (const StanceProfile* sp : {&result.profile_a, &result.profile_b}) {
        json rec{{"type", "stance"},
                 {"stance", filterpipe::stance_name(sp->stance)},
                 {"vector", vector_to_json(sp->vector)}};
        out << rec.dump() << '\n';
    }
    for (const auto& p : result.profiles) {
        json tops = json::array();
        for (const auto& [trigram, count] : p.top_trigrams) {
            tops.push_back(json::array({trigram, count}));
        }
        json rec{{"type", "user"},
                 {"id", p.account_id},
                 {"stance", filterpipe::stance_name(p.assigned_stance)},
                 {"sim_a", p.sim_a},
                 {"sim_b", p.sim_b},
                 {"vector", vector_to_json(p.vector)},
                 {"top_trigrams", tops}};
        out << rec.dump() << '\n';
    }
}

ProfileResult load_profiles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path);
    ProfileResult result;
    bool have_a = false, have_b = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json rec = json::parse(line);
        const std::string type = rec.at("type").get<std::string>();
        if (type == "report") {
            result.report.side_a_users = rec.at("side_a_users").get<std::uint64_t>();
            result.report.side_a_tweets = rec.at("side_a_tweets").get<std::uint64_t>();
            result.report.side_b_users = rec.at("side_b_users").get<std::uint64_t>();
            result.report.side_b_tweets = rec.at("side_b_tweets").get<std::uint64_t>();
            result.report.unclassified = rec.at("unclassified").get<std::uint64_t>();
            result.report.flipped = rec.at("flipped").get<std::uint64_t>();
        } else if (type == "stance") {
            StanceProfile sp{stance_from_name(rec.at("stance").get<std::string>()),
                             vector_from_json(rec.at("vector"))};
            if (sp.stance == Stance::SideA) {
                result.profile_a = std::move(sp);
                have_a = true;
            } else {
                result.profile_b = std::move(sp);
                have_b = true;
            }
        } else if (type == "user") {
            UserProfile p;
            p.account_id = rec.at("id").get<std::string>();
            p.assigned_stance = stance_from_name(rec.at("stance").get<std::string>());
            p.sim_a = rec.at("sim_a").get<double>();
            p.sim_b = rec.at("sim_b").get<double>();
            p.vector = vector_from_json(rec.at("vector"));
            for (const auto& t : rec.at("top_trigrams")) {
                p.top_trigrams.emplace_back(t.at(0).get<std::string>(),
                                            t.at(1).get<std::uint32_t>());
            }
            result.profiles.push_back(std::move(p));
        } else {
            throw std::runtime_error("unknown record type in " + path + ": " + type);
        }
    }
    if (!have_a || !have_b) {
        throw std::runtime_error("profile file missing stance profiles: " + path);
    }
    return result;
}

}  // namespace polarrec::stance

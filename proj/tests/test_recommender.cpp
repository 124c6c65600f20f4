#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "polarrec/recommender.hpp"
#include "test_util.hpp"

using namespace polarrec;
using namespace polarrec::recommender;
using polarrec::vectorspace::SparseVector;

namespace {

const textproc::StopwordSet kNoStop{};

ScoredItem item(const std::string& id, double score, Stance stance = Stance::SideA) {
    return {id, score, stance};
}

CandidateSet planted_candidates(std::size_t per_side, std::uint64_t seed,
                                vectorspace::VectorSpace* space_out) {
    // Synthetic candidate vectors over a tiny vocabulary; candidate 0 of
    // each side is exactly the query trigram.
    std::vector<vectorspace::TrigramCounts> docs;
    for (const char* t : {"q q q", "x x x", "y y y", "z z z"}) {
        docs.push_back({{t, 1}});
    }
    auto space = vectorspace::build_vocabulary(docs);
    std::mt19937_64 gen(seed);
    CandidateSet set;
    const char* extras[] = {"x x x", "y y y", "z z z"};
    for (Stance stance : {Stance::SideA, Stance::SideB}) {
        for (std::size_t i = 0; i < per_side; ++i) {
            vectorspace::TrigramCounts counts;
            if (i == 0) {
                counts["q q q"] = 1;
            } else {
                if (gen() % 2) counts["q q q"] = 1;
                counts[extras[gen() % 3]] = 1 + gen() % 3;
            }
            Candidate c;
            c.tweet_id = std::string(stance == Stance::SideA ? "a" : "b") + std::to_string(i);
            c.account_id = "author_" + c.tweet_id;
            c.stance = stance;
            c.vector = vectorspace::tfidf_vector(counts, space);
            set.items.push_back(std::move(c));
        }
        (stance == Stance::SideA ? set.n_side_a : set.n_side_b) = per_side;
    }
    *space_out = std::move(space);
    return set;
}

stance::UserProfile planted_user(const vectorspace::VectorSpace& space) {
    stance::UserProfile user;
    user.account_id = "target";
    user.assigned_stance = Stance::SideA;
    user.top_trigrams = {{"q q q", 5}};
    user.vector = vectorspace::tfidf_vector({{"q q q", 1}}, space);
    return user;
}

}  // namespace

TEST_CASE("sample_candidates is deterministic and honors the pool bound") {
    std::vector<corpus::Account> accounts;
    std::vector<std::pair<std::string, std::string>> tweets;
    std::vector<stance::UserProfile> profiles;
    for (int u = 0; u < 6; ++u) {
        const bool side_a = u < 3;
        const std::string id = (side_a ? "a" : "b") + std::to_string(u);
        accounts.push_back(testutil::make_account(id));
        stance::UserProfile p;
        p.account_id = id;
        p.assigned_stance = side_a ? Stance::SideA : Stance::SideB;
        profiles.push_back(p);
        for (int t = 0; t < 5; ++t) {
            tweets.emplace_back(id, side_a ? "alpha beta gamma delta" : "one two three four");
        }
    }
    const auto c = testutil::make_corpus(accounts, tweets);
    std::vector<vectorspace::TrigramCounts> docs = {{{"alpha beta gamma", 1}},
                                                    {{"one two three", 1}}};
    const auto space = vectorspace::build_vocabulary(docs);

    const auto s1 = sample_candidates(c, profiles, kNoStop, space, 10, 42);
    const auto s2 = sample_candidates(c, profiles, kNoStop, space, 10, 42);
    REQUIRE(s1.items.size() == 20);
    for (std::size_t i = 0; i < s1.items.size(); ++i) {
        CHECK(s1.items[i].tweet_id == s2.items[i].tweet_id);
    }

    // n_per_stance equal to the pool size returns the entire pool
    const auto full = sample_candidates(c, profiles, kNoStop, space, 15, 7);
    std::set<std::string> ids;
    for (const auto& item : full.items) ids.insert(item.tweet_id);
    CHECK(ids.size() == 30);

    CHECK_THROWS_WITH_AS(sample_candidates(c, profiles, kNoStop, space, 16, 7),
                         doctest::Contains("16"), std::runtime_error);
}

TEST_CASE("build_query_vector uses idf weights over the top-q trigrams") {
    std::vector<vectorspace::TrigramCounts> docs = {{{"q q q", 1}, {"r r r", 1}},
                                                    {{"r r r", 1}}};
    const auto space = vectorspace::build_vocabulary(docs);
    const auto q1 = build_query_vector({{"q q q", 9}, {"r r r", 3}}, space, 1);
    REQUIRE(q1.entries.size() == 1);
    CHECK(q1.entries[0].second == doctest::Approx(1.0));

    const auto q2 = build_query_vector({{"q q q", 9}, {"r r r", 3}}, space, 2);
    CHECK(q2.entries.size() == 2);
    CHECK(q2.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // rarer trigram carries more weight
    const auto iq = space.vocab.index_of("q q q");
    double wq = 0, wr = 0;
    for (const auto& [i, w] : q2.entries) (i == iq ? wq : wr) = w;
    CHECK(wq > wr);

    CHECK(build_query_vector({{"not here", 1}}, space, 1).empty());
}

TEST_CASE("score_candidates ranks the exact match first") {
    vectorspace::VectorSpace space;
    const auto candidates = planted_candidates(30, 3, &space);
    const auto user = planted_user(space);
    const auto query = build_query_vector(user.top_trigrams, space, 1);

    const auto ranked = score_candidates(query, candidates);
    REQUIRE_FALSE(ranked.empty());
    CHECK(ranked[0].score == doctest::Approx(1.0));
    // exact-match candidates exist on both sides; tie-break by tweet_id
    CHECK(ranked[0].tweet_id == "a0");
    for (std::size_t i = 1; i < ranked.size(); ++i) {
        CHECK(ranked[i - 1].score >= ranked[i].score);
        if (ranked[i - 1].score == ranked[i].score) {
            CHECK(ranked[i - 1].tweet_id < ranked[i].tweet_id);
        }
        CHECK(ranked[i].score > 0.0);
    }

    // no candidate shares a query trigram -> empty list
    const auto orthogonal = build_query_vector({{"x x x", 1}}, space, 1);
    auto no_x = candidates;
    for (auto& c : no_x.items) {
        c.vector = vectorspace::tfidf_vector({{"q q q", 1}}, space);
    }
    CHECK(score_candidates(orthogonal, no_x).empty());

    CHECK_THROWS_AS(score_candidates(SparseVector{}, candidates), std::runtime_error);
}

TEST_CASE("score_candidates matches a brute-force score-and-sort oracle") {
    vectorspace::VectorSpace space;
    const auto candidates = planted_candidates(50, 9, &space);
    const auto user = planted_user(space);
    const auto query = build_query_vector(user.top_trigrams, space, 1);
    const auto ranked = score_candidates(query, candidates);

    std::vector<ScoredItem> oracle;
    for (const auto& c : candidates.items) {
        const double s = vectorspace::cosine(query, c.vector);
        if (s > 0.0) oracle.push_back({c.tweet_id, s, c.stance});
    }
    std::stable_sort(oracle.begin(), oracle.end(), [](const auto& a, const auto& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.tweet_id < b.tweet_id;
    });
    REQUIRE(ranked.size() == oracle.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        CHECK(ranked[i].tweet_id == oracle[i].tweet_id);
        CHECK(ranked[i].score == doctest::Approx(oracle[i].score).epsilon(1e-12));
    }
}

TEST_CASE("hybrid_mix splits per the ratio") {
    std::vector<ScoredItem> a, b;
    for (int i = 0; i < 10; ++i) {
        a.push_back(item("a" + std::to_string(i), 1.0 - i * 0.05, Stance::SideA));
        b.push_back(item("b" + std::to_string(i), 1.0 - i * 0.05, Stance::SideB));
    }
    const auto mix = hybrid_mix(a, b, 10, 0.5);
    REQUIRE(mix.size() == 10);
    for (int i = 0; i < 5; ++i) CHECK(mix[i].stance == Stance::SideA);
    for (int i = 5; i < 10; ++i) CHECK(mix[i].stance == Stance::SideB);

    const auto mix3 = hybrid_mix(a, b, 10, 0.3);
    CHECK(std::count_if(mix3.begin(), mix3.end(),
                        [](const auto& x) { return x.stance == Stance::SideA; }) == 3);

    const auto all_a = hybrid_mix(a, b, 10, 1.0);
    CHECK(std::all_of(all_a.begin(), all_a.end(),
                      [](const auto& x) { return x.stance == Stance::SideA; }));
}

TEST_CASE("hybrid_mix backfills a short side") {
    std::vector<ScoredItem> a, b;
    for (int i = 0; i < 10; ++i) a.push_back(item("a" + std::to_string(i), 1.0 - i * 0.05));
    for (int i = 0; i < 3; ++i) b.push_back(item("b" + std::to_string(i), 0.9, Stance::SideB));
    const auto mix = hybrid_mix(a, b, 10, 0.5);
    REQUIRE(mix.size() == 10);
    CHECK(std::count_if(mix.begin(), mix.end(),
                        [](const auto& x) { return x.stance == Stance::SideA; }) == 7);

    // both sides exhausted -> shorter list
    const auto short_mix = hybrid_mix({item("a0", 1.0)}, {item("b0", 1.0, Stance::SideB)}, 10, 0.5);
    CHECK(short_mix.size() == 2);
}

TEST_CASE("recommend variants") {
    vectorspace::VectorSpace space;
    auto candidates = planted_candidates(40, 21, &space);
    const auto user = planted_user(space);

    const auto standard = recommend(user, candidates, Variant::Standard, space);
    const auto only_a = recommend(user, candidates, Variant::SideAOnly, space);
    const auto only_b = recommend(user, candidates, Variant::SideBOnly, space);
    const auto hybrid = recommend(user, candidates, Variant::Hybrid, space);

    for (const auto* list : {&standard, &only_a, &only_b, &hybrid}) {
        CHECK(list->items.size() <= 10);
        std::set<std::string> seen;
        for (const auto& item : list->items) {
            CHECK(seen.insert(item.tweet_id).second);  // no duplicates
        }
    }
    for (const auto& item : only_a.items) CHECK(item.stance == Stance::SideA);
    for (const auto& item : only_b.items) CHECK(item.stance == Stance::SideB);

    // Standard equals the top-k of the merged per-stance score lists
    const auto query = build_query_vector(user.top_trigrams, space, 1);
    auto merged = score_candidates(query, candidates, Stance::SideA);
    auto ranked_b = score_candidates(query, candidates, Stance::SideB);
    merged.insert(merged.end(), ranked_b.begin(), ranked_b.end());
    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.tweet_id < b.tweet_id;
    });
    merged.resize(std::min<std::size_t>(10, merged.size()));
    REQUIRE(standard.items.size() == merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        CHECK(standard.items[i].tweet_id == merged[i].tweet_id);
    }

    // hybrid 5 + 5 when both sides have enough scored items
    CHECK(std::count_if(hybrid.items.begin(), hybrid.items.end(),
                        [](const auto& x) { return x.stance == Stance::SideA; }) == 5);
    CHECK(hybrid.items.size() == 10);
}

TEST_CASE("recommend never returns the target user's own tweets") {
    vectorspace::VectorSpace space;
    auto candidates = planted_candidates(20, 33, &space);
    auto user = planted_user(space);
    user.account_id = "author_a0";  // owns the perfect-match candidate a0
    const auto list = recommend(user, candidates, Variant::Standard, space);
    for (const auto& item : list.items) CHECK(item.tweet_id != "a0");
}

TEST_CASE("recommend rejects bad inputs") {
    vectorspace::VectorSpace space;
    const auto candidates = planted_candidates(5, 1, &space);
    auto user = planted_user(space);
    CHECK_THROWS_AS(recommend(user, candidates, Variant::Standard, space, 0), std::runtime_error);
    user.top_trigrams = {{"unknown trigram here", 2}};
    CHECK_THROWS_AS(recommend(user, candidates, Variant::Standard, space), std::runtime_error);
}

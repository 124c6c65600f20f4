#include "polarrec/session.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "polarrec/rng.hpp"

namespace polarrec::session {

using nlohmann::json;

PipelineOutput run_pipeline(const config::RunConfig& cfg) {
    PipelineOutput out;
    out.stoplist = textproc::load_stopwords(cfg.stopwords_path);
    auto accounts = corpus::load_accounts(cfg.accounts_path);
    out.corpus = corpus::load_tweets(cfg.tweets_path, std::move(accounts), cfg.lenient);
    out.filter = filterpipe::run_filter_pipeline(out.corpus, cfg.hashtags, cfg.language);

    // One profile document per surviving user; document order is the
    // (sorted) survivor order so vocabulary indices are deterministic.
    std::vector<vectorspace::TrigramCounts> documents;
    documents.reserve(out.filter.survivors.size());
    for (const auto& [account_id, seed_stance] : out.filter.survivors) {
        std::vector<const corpus::Tweet*> tweets;
        auto it = out.corpus.tweets_by_account.find(account_id);
        if (it != out.corpus.tweets_by_account.end()) {
            for (const auto& tid : it->second) tweets.push_back(&out.corpus.tweets.at(tid));
        }
        documents.push_back(stance::pooled_trigram_counts(tweets, out.stoplist));
    }
    out.space = vectorspace::build_vocabulary(documents, cfg.min_df);
    out.profiles = stance::build_all_profiles(out.corpus, out.filter.survivors, out.stoplist,
                                              out.space);
    return out;
}

void write_pipeline_outputs(const PipelineOutput& out, const config::RunConfig& cfg) {
    std::filesystem::create_directories(cfg.out_dir);

    {
        json stage{{"input_accounts", out.filter.report.input_accounts},
                   {"single_group", out.filter.report.single_group},
                   {"quartile", out.filter.report.quartile},
                   {"language", out.filter.report.language}};
        std::ofstream f(cfg.out_dir + "/stage_report.json");
        f << stage.dump(2) << '\n';
    }
    {
        const auto& r = out.profiles.report;
        json cls{{"side_a_users", r.side_a_users},     {"side_a_tweets", r.side_a_tweets},
                 {"side_b_users", r.side_b_users},     {"side_b_tweets", r.side_b_tweets},
                 {"unclassified", r.unclassified},     {"flipped", r.flipped}};
        std::ofstream f(cfg.out_dir + "/classification_report.json");
        f << cls.dump(2) << '\n';
    }
    vectorspace::save_space(out.space, cfg.out_dir + "/index.tsv");
    stance::save_profiles(out.profiles, cfg.out_dir + "/profiles.jsonl");
}

LoadedArtifacts load_artifacts(const config::RunConfig& cfg) {
    LoadedArtifacts artifacts;
    artifacts.stoplist = textproc::load_stopwords(cfg.stopwords_path);
    auto accounts = corpus::load_accounts(cfg.accounts_path);
    artifacts.corpus = corpus::load_tweets(cfg.tweets_path, std::move(accounts), cfg.lenient);
    artifacts.space = vectorspace::load_space(cfg.out_dir + "/index.tsv");
    artifacts.profiles = stance::load_profiles(cfg.out_dir + "/profiles.jsonl");
    return artifacts;
}

recommender::CandidateSet build_candidates(const LoadedArtifacts& artifacts,
                                           const config::RunConfig& cfg) {
    return recommender::sample_candidates(artifacts.corpus, artifacts.profiles.profiles,
                                          artifacts.stoplist, artifacts.space, cfg.n_per_stance,
                                          rng::derive_seed(cfg.seed, 0x63616e64));
}

}  // namespace polarrec::session

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarrec/session.hpp"
#include "polarrec/synthgen.hpp"

namespace {

using namespace polarrec;

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct CommonOverrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<std::size_t> k;
    std::optional<double> ratio;
    std::optional<std::size_t> query_trigrams;
    std::optional<std::uint64_t> n_users;
};

config::RunConfig resolve_config(const CommonOverrides& o) {
    auto cfg = config::load_config(o.config_path);
    if (o.seed) cfg.seed = *o.seed;
    if (o.out_dir) cfg.out_dir = *o.out_dir;
    if (o.k) cfg.k = *o.k;
    if (o.ratio) cfg.ratio = *o.ratio;
    if (o.query_trigrams) cfg.query_trigrams = *o.query_trigrams;
    if (o.n_users) cfg.n_users_per_stance = *o.n_users;
    cfg.validate();
    return cfg;
}

void add_common_flags(CLI::App* cmd, CommonOverrides& o) {
    cmd->add_option("--config", o.config_path, "run configuration file")->required();
    cmd->add_option("--seed", o.seed, "master seed override");
    cmd->add_option("--out", o.out_dir, "output directory override");
}

int cmd_synth(const std::string& spec_path, const std::string& out_dir,
              std::optional<std::uint64_t> seed) {
    auto spec = synthgen::load_spec(spec_path);
    if (seed) spec.seed = *seed;
    const auto files = synthgen::generate(spec, out_dir);
    std::cerr << "synth: wrote " << files.accounts_path << ", " << files.tweets_path << ", "
              << files.ground_truth_path << "\n";
    return 0;
}

int cmd_pipeline(const config::RunConfig& cfg) {
    const auto out = session::run_pipeline(cfg);
    session::write_pipeline_outputs(out, cfg);
    std::cerr << "pipeline: " << out.filter.report.input_accounts << " accounts -> single_group "
              << out.filter.report.single_group << " -> quartile " << out.filter.report.quartile
              << " -> language " << out.filter.report.language << "\n";
    std::cerr << "pipeline: classified side_a " << out.profiles.report.side_a_users << ", side_b "
              << out.profiles.report.side_b_users << ", unclassified "
              << out.profiles.report.unclassified << ", flipped " << out.profiles.report.flipped
              << "\n";
    return 0;
}

int cmd_recommend(const config::RunConfig& cfg, const std::string& account_id,
                  const std::string& variant_name) {
    const auto variant = recommender::variant_from_name(variant_name);
    if (!variant) throw std::runtime_error("unknown variant: " + variant_name);
    const auto artifacts = session::load_artifacts(cfg);

    const stance::UserProfile* user = nullptr;
    for (const auto& p : artifacts.profiles.profiles) {
        if (p.account_id == account_id) {
            user = &p;
            break;
        }
    }
    if (!user) {
        if (!artifacts.corpus.accounts.count(account_id)) {
            throw std::runtime_error("unknown account: " + account_id);
        }
        throw std::runtime_error("account " + account_id + " is unclassified");
    }

    const auto candidates = session::build_candidates(artifacts, cfg);
    const auto list = recommender::recommend(*user, candidates, *variant, artifacts.space, cfg.k,
                                             cfg.ratio, cfg.query_trigrams);
    for (std::size_t i = 0; i < list.items.size(); ++i) {
        const auto& item = list.items[i];
        std::printf("%2zu  %.4f  %-8s  %s\n", i + 1, item.score,
                    filterpipe::stance_name(item.stance),
                    artifacts.corpus.tweets.at(item.tweet_id).text.c_str());
    }
    return 0;
}

int cmd_evaluate(const config::RunConfig& cfg) {
    const auto artifacts = session::load_artifacts(cfg);
    const auto candidates = session::build_candidates(artifacts, cfg);
    std::vector<recommender::RecommendationList> dump;
    const auto report = evalmetrics::run_evaluation(
        artifacts.profiles.profiles, candidates, artifacts.space, cfg.n_users_per_stance, cfg.k,
        cfg.ratio, cfg.query_trigrams, cfg.seed, &dump);

    std::filesystem::create_directories(cfg.out_dir);
    {
        std::ofstream f(cfg.out_dir + "/evaluation.txt");
        f << evalmetrics::format_report_table(report);
    }
    {
        std::ofstream f(cfg.out_dir + "/evaluation.tsv");
        f << evalmetrics::format_report_tsv(report);
    }
    {
        std::ofstream f(cfg.out_dir + "/recommendations.jsonl");
        for (const auto& list : dump) {
            nlohmann::json items = nlohmann::json::array();
            for (const auto& item : list.items) {
                char score[16];
                std::snprintf(score, sizeof(score), "%.6f", item.score);
                items.push_back(nlohmann::json::array(
                    {item.tweet_id, score, filterpipe::stance_name(item.stance)}));
            }
            nlohmann::json rec{{"account", list.account_id},
                               {"variant", recommender::variant_name(list.variant)},
                               {"items", items}};
            f << rec.dump() << '\n';
        }
    }
    std::cerr << "evaluate: " << report.rows.size() << " rows, side_a users "
              << report.n_users_side_a << ", side_b users " << report.n_users_side_b
              << (report.clamped ? " (clamped)" : "") << "\n";
    std::cout << evalmetrics::format_report_table(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-stance content-based tweet recommender and evaluation harness"};
    app.require_subcommand(1);

    std::string spec_path, synth_out;
    std::optional<std::uint64_t> synth_seed;
    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
    synth->add_option("--spec", spec_path, "synth spec file")->required();
    synth->add_option("--out", synth_out, "output directory")->required();
    synth->add_option("--seed", synth_seed, "seed override");

    CommonOverrides pipe_o;
    auto* pipeline = app.add_subcommand("pipeline", "ingest, filter, build profiles");
    add_common_flags(pipeline, pipe_o);

    CommonOverrides rec_o;
    std::string account_id, variant = "standard";
    auto* recommend = app.add_subcommand("recommend", "print recommendations for one account");
    add_common_flags(recommend, rec_o);
    recommend->add_option("--account", account_id, "account id")->required();
    recommend->add_option("--variant", variant, "standard|side-a|side-b|hybrid");
    recommend->add_option("--k", rec_o.k, "list length");
    recommend->add_option("--ratio", rec_o.ratio, "hybrid side-A share");
    recommend->add_option("--query-trigrams", rec_o.query_trigrams, "query trigram count");

    CommonOverrides eval_o;
    auto* evaluate = app.add_subcommand("evaluate", "run the four-variant evaluation");
    add_common_flags(evaluate, eval_o);
    evaluate->add_option("--k", eval_o.k, "list length");
    evaluate->add_option("--ratio", eval_o.ratio, "hybrid side-A share");
    evaluate->add_option("--query-trigrams", eval_o.query_trigrams, "query trigram count");
    evaluate->add_option("--n-users", eval_o.n_users, "evaluation users per stance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (synth->parsed()) return cmd_synth(spec_path, synth_out, synth_seed);
        if (pipeline->parsed()) return cmd_pipeline(resolve_config(pipe_o));
        if (recommend->parsed()) return cmd_recommend(resolve_config(rec_o), account_id, variant);
        if (evaluate->parsed()) return cmd_evaluate(resolve_config(eval_o));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}

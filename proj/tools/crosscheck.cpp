#include "crosscheck/app.hpp"
#include "crosscheck/error.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <set>
#include <string>

namespace {

using namespace crosscheck;

constexpr int kExitOk = 0;
constexpr int kExitHardError = 1;
constexpr int kExitUnverifiable = 2;

struct ResourceOptions {
    std::string stopwords_path;
    std::string gazetteer_path;
    std::string vectors_path;
    std::string sentiment_path;
    std::string emotion_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--stopwords", stopwords_path,
                        "Stopword file (default: bundled English list)");
        cmd->add_option("--gazetteer", gazetteer_path, "Entity gazetteer file");
        cmd->add_option("--vectors", vectors_path, "Word-vector file (text format)");
        cmd->add_option("--sentiment-lexicon", sentiment_path, "TSV word<TAB>weight");
        cmd->add_option("--emotion-lexicon", emotion_path, "TSV word<TAB>label");
    }

    Resources build() const {
        Resources res;
        if (!stopwords_path.empty()) res.stopwords = load_stopwords(stopwords_path);
        if (!gazetteer_path.empty()) {
            res.extractor = EntityExtractor::from_gazetteer_file(gazetteer_path);
        }
        if (!vectors_path.empty()) res.vectors = WordVectorStore::load(vectors_path);
        if (!sentiment_path.empty()) res.sentiment_lexicon = SentimentLexicon::load(sentiment_path);
        if (!emotion_path.empty()) res.emotion_lexicon = EmotionLexicon::load(emotion_path);
        return res;
    }
};

struct PipelineOptions {
    PipelineConfig config;

    void attach(CLI::App* cmd) {
        cmd->add_option("--radius-days", config.radius_days, "Window radius in days")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--m", config.m, "Max posts kept by the relevance filter");
        cmd->add_option("--tau", config.tau, "Relevance cosine threshold");
        cmd->add_option("--seed", config.clustering_seed, "Clustering seed");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Cross-checks short claims against a time-windowed corpus of reliable posts"};
    app.require_subcommand(1);

    // ingest
    auto* ingest_cmd = app.add_subcommand("ingest", "Clean a JSONL post file into a corpus store");
    std::string ingest_posts_path, ingest_out;
    std::string ingest_stopwords;
    ingest_cmd->add_option("--posts", ingest_posts_path, "JSONL posts file")->required();
    ingest_cmd->add_option("--out", ingest_out, "Corpus store output path")->required();
    ingest_cmd->add_option("--stopwords", ingest_stopwords,
                           "Stopword file (default: bundled English list)");

    // check
    auto* check_cmd = app.add_subcommand("check", "Classify one claim against the corpus");
    std::string check_claim_text, check_time, check_corpus, check_model;
    ResourceOptions check_res;
    PipelineOptions check_pipe;
    check_cmd->add_option("--claim", check_claim_text, "Claim text")->required();
    check_cmd->add_option("--time", check_time, "Claim timestamp (RFC 3339)")->required();
    check_cmd->add_option("--corpus", check_corpus, "Corpus store")->required();
    check_cmd->add_option("--model", check_model, "Model file")->required();
    check_res.attach(check_cmd);
    check_pipe.attach(check_cmd);

    // train
    auto* train_cmd = app.add_subcommand("train", "Train a verdict model from labeled claims");
    std::string train_claims, train_corpus, train_out;
    ResourceOptions train_res;
    PipelineOptions train_pipe;
    std::uint64_t train_seed = 0;
    double train_holdout = 0.2;
    std::size_t train_trees = 100;
    std::size_t train_max_depth = 0;
    train_cmd->add_option("--claims", train_claims, "Labeled claims (.jsonl or .csv)")->required();
    train_cmd->add_option("--corpus", train_corpus, "Corpus store")->required();
    train_cmd->add_option("--out", train_out, "Model output path")->required();
    train_cmd->add_option("--train-seed", train_seed, "Training seed (split, balance, bagging)");
    train_cmd->add_option("--holdout", train_holdout,
                          "Held-out fraction evaluated after training (0 trains on everything)");
    train_cmd->add_option("--trees", train_trees, "Number of trees");
    train_cmd->add_option("--max-depth", train_max_depth, "Depth cap (0 = unlimited)");
    train_res.attach(train_cmd);
    train_pipe.attach(train_cmd);

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "Score labeled claims with a trained model");
    std::string eval_claims, eval_corpus, eval_model;
    ResourceOptions eval_res;
    PipelineOptions eval_pipe;
    eval_cmd->add_option("--claims", eval_claims, "Labeled claims (.jsonl or .csv)")->required();
    eval_cmd->add_option("--corpus", eval_corpus, "Corpus store")->required();
    eval_cmd->add_option("--model", eval_model, "Model file")->required();
    eval_res.attach(eval_cmd);
    eval_pipe.attach(eval_cmd);

    // cluster-report
    auto* report_cmd = app.add_subcommand("cluster-report", "Cluster one window of the corpus");
    std::string report_corpus, report_time;
    ResourceOptions report_res;
    PipelineOptions report_pipe;
    report_cmd->add_option("--corpus", report_corpus, "Corpus store")->required();
    report_cmd->add_option("--time", report_time, "Window center (RFC 3339)")->required();
    report_res.attach(report_cmd);
    report_pipe.attach(report_cmd);

    // extract-features
    auto* feat_cmd = app.add_subcommand("extract-features",
                                        "Emit the 12-number feature vector per claim");
    std::string feat_claim_text, feat_time, feat_claims, feat_corpus;
    ResourceOptions feat_res;
    PipelineOptions feat_pipe;
    feat_cmd->add_option("--claim", feat_claim_text, "Single claim text");
    feat_cmd->add_option("--time", feat_time, "Timestamp for --claim (RFC 3339)");
    feat_cmd->add_option("--claims", feat_claims, "Labeled claims file (.jsonl or .csv)");
    feat_cmd->add_option("--corpus", feat_corpus, "Corpus store")->required();
    feat_res.attach(feat_cmd);
    feat_pipe.attach(feat_cmd);

    CLI11_PARSE(app, argc, argv);

    if (ingest_cmd->parsed()) {
        const StopwordSet stopwords =
            ingest_stopwords.empty() ? default_stopwords() : load_stopwords(ingest_stopwords);
        const IngestResult result = ingest_posts(ingest_posts_path, stopwords);
        save_corpus(result.store, ingest_out);
        for (const std::string& id : result.skipped_ids) {
            std::cerr << "skipped post '" << id << "': no tokens survive cleaning\n";
        }
        std::cout << "{\"ingested\":" << result.store.posts.size()
                  << ",\"skipped\":" << result.skipped_ids.size() << "}\n";
        return kExitOk;
    }

    if (check_cmd->parsed()) {
        const Resources res = check_res.build();
        const CorpusStore store = load_corpus(check_corpus);
        const RandomForestModel model = load_model(check_model);
        const Instant t = parse_rfc3339(check_time);
        const CheckOutcome outcome =
            check_claim(check_claim_text, t, store.posts, model, res, check_pipe.config);
        if (!outcome.ok()) {
            std::cout << unverifiable_to_json(*outcome.unverifiable, check_claim_text, t).dump(2)
                      << '\n';
            return kExitUnverifiable;
        }
        std::cout << verdict_to_json(*outcome.verdict, check_claim_text, t).dump(2) << '\n';
        return kExitOk;
    }

    if (train_cmd->parsed()) {
        const Resources res = train_res.build();
        const CorpusStore store = load_corpus(train_corpus);
        const std::vector<LabeledClaim> claims = load_claims(train_claims);

        auto [train_set, test_set] = split_claims(claims, train_holdout, train_seed);
        TrainConfig config;
        config.seed = train_seed;
        config.n_trees = train_trees;
        if (train_max_depth > 0) config.max_depth = train_max_depth;

        TrainReport report;
        const RandomForestModel model =
            train_pipeline(train_set, store.posts, res, train_pipe.config, config, &report);
        save_model(model, train_out);

        nlohmann::json out;
        out["report"] = train_report_to_json(report);
        out["holdout"] = train_holdout;
        if (!test_set.empty()) {
            const std::set<std::string> ids(report.training_ids.begin(), report.training_ids.end());
            const Metrics metrics =
                evaluate(model, test_set, store.posts, res, train_pipe.config, ids);
            out["holdout_metrics"] = metrics_to_json(metrics);
        }
        std::cout << out.dump(2) << '\n';
        return kExitOk;
    }

    if (eval_cmd->parsed()) {
        const Resources res = eval_res.build();
        const CorpusStore store = load_corpus(eval_corpus);
        const RandomForestModel model = load_model(eval_model);
        const std::vector<LabeledClaim> claims = load_claims(eval_claims);
        const Metrics metrics = evaluate(model, claims, store.posts, res, eval_pipe.config);
        for (const std::string& id : metrics.overlapping_ids) {
            std::cerr << "warning: claim '" << id << "' was seen during training\n";
        }
        std::cout << metrics_to_json(metrics).dump(2) << '\n';
        return kExitOk;
    }

    if (report_cmd->parsed()) {
        const Resources res = report_res.build();
        const CorpusStore store = load_corpus(report_corpus);
        const Instant t = parse_rfc3339(report_time);
        try {
            const ClusterReport report = cluster_report(t, store.posts, res, report_pipe.config);
            std::cout << cluster_report_to_json(report).dump(2) << '\n';
            return kExitOk;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::EmptyWindow || e.kind() == ErrorKind::EmptyVocabulary ||
                e.kind() == ErrorKind::TooFewPoints) {
                std::cerr << e.what() << '\n';
                return kExitUnverifiable;
            }
            throw;
        }
    }

    if (feat_cmd->parsed()) {
        const Resources res = feat_res.build();
        const CorpusStore store = load_corpus(feat_corpus);
        if (feat_claims.empty() == feat_claim_text.empty()) {
            std::cerr << "extract-features needs exactly one of --claim/--claims\n";
            return kExitHardError;
        }
        if (!feat_claim_text.empty()) {
            if (feat_time.empty()) {
                std::cerr << "--claim requires --time\n";
                return kExitHardError;
            }
            const Instant t = parse_rfc3339(feat_time);
            const FeatureOutcome outcome =
                claim_features(feat_claim_text, t, store.posts, res, feat_pipe.config);
            if (!outcome.ok()) {
                std::cerr << "unverifiable: " << to_string(*outcome.unverifiable) << '\n';
                return kExitUnverifiable;
            }
            std::cout << nlohmann::json(*outcome.features).dump() << '\n';
            return kExitOk;
        }
        std::size_t emitted = 0;
        for (const LabeledClaim& claim : load_claims(feat_claims)) {
            const FeatureOutcome outcome =
                claim_features(claim.text, claim.timestamp, store.posts, res, feat_pipe.config);
            if (!outcome.ok()) {
                std::cerr << "unverifiable claim '" << claim.id
                          << "': " << to_string(*outcome.unverifiable) << '\n';
                continue;
            }
            std::cout << nlohmann::json(*outcome.features).dump() << '\n';
            ++emitted;
        }
        return emitted > 0 ? kExitOk : kExitUnverifiable;
    }

    return kExitHardError;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHardError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHardError;
    }
}

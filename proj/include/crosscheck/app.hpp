#pragma once

#include "crosscheck/affect.hpp"
#include "crosscheck/clustering.hpp"
#include "crosscheck/corpus.hpp"
#include "crosscheck/embedding.hpp"
#include "crosscheck/entities.hpp"
#include "crosscheck/features.hpp"
#include "crosscheck/forest.hpp"
#include "crosscheck/vectorizer.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace crosscheck {

struct LabeledClaim {
    std::string id;
    std::string text;
    Instant timestamp = 0;
    Label label = Label::Fake;
};

// Stage at which a claim turned out to be uncheckable. Unverifiable is a
// first-class outcome of the pipeline, not an error.
enum class FailStage { EmptyWindow, EmptyVocabulary, ZeroTargetVector, NoRelevantStory };
const char* to_string(FailStage stage);

struct PipelineConfig {
    int radius_days = 3;
    std::size_t m = 5;
    double tau = 0.1;
    std::uint64_t clustering_seed = 0;
};

// Read-only analyzers shared by every stage. Empty stores/lexicons are valid
// (the corresponding features degrade to zero).
struct Resources {
    StopwordSet stopwords = default_stopwords();
    EntityExtractor extractor;
    WordVectorStore vectors;
    SentimentLexicon sentiment_lexicon;
    EmotionLexicon emotion_lexicon;
};

struct ClusterSummary {
    int index = 0;
    std::size_t size = 0;
    // Top entities by summed TF-IDF weight over the cluster's posts.
    std::vector<std::pair<std::string, double>> top_entities;
};

struct Verdict {
    Label label = Label::Fake;
    double score = 0.0;
    ClusterSummary matched_cluster;
    std::vector<std::pair<CleanPost, double>> evidence; // post, cosine to target
    FeatureVector features{};
};

struct CheckOutcome {
    std::optional<Verdict> verdict;
    std::optional<FailStage> unverifiable;

    bool ok() const { return verdict.has_value(); }
};

struct FeatureOutcome {
    std::optional<FeatureVector> features;
    std::optional<FailStage> unverifiable;

    bool ok() const { return features.has_value(); }
};

struct Metrics {
    std::int64_t tp = 0, fp = 0, fn = 0, tn = 0; // fake is the positive class
    std::optional<double> accuracy, precision, recall;
    std::vector<std::pair<std::string, FailStage>> unverifiable;
    std::vector<std::string> overlapping_ids; // claims sharing ids with training

    std::int64_t verifiable() const { return tp + fp + fn + tn; }
};

struct TrainReport {
    std::size_t input_count = 0;
    std::size_t verifiable_fake = 0;
    std::size_t verifiable_real = 0;
    std::size_t balanced_per_class = 0;
    std::vector<std::pair<std::string, FailStage>> dropped;
    std::vector<std::string> training_ids; // after balancing, in training order
};

// ---- corpus store -------------------------------------------------------

struct CorpusStore {
    std::vector<CleanPost> posts;
    std::vector<std::string> stopwords; // list used at ingest, sorted
};

struct IngestResult {
    CorpusStore store;
    std::vector<std::string> skipped_ids; // posts that cleaned to nothing
};

IngestResult ingest_posts(const std::string& posts_path, const StopwordSet& stopwords);
void save_corpus(const CorpusStore& store, const std::string& path);
CorpusStore load_corpus(const std::string& path);

// ---- labeled claims -----------------------------------------------------

// JSONL: post fields plus "label": "fake"|"real" ("source" optional).
std::vector<LabeledClaim> load_claims_jsonl(const std::string& path);
// Fake-Real CSV layout (title, text, date, label); titles become claim text.
std::vector<LabeledClaim> load_claims_csv(const std::string& path);
// Dispatches on the .csv extension, JSONL otherwise.
std::vector<LabeledClaim> load_claims(const std::string& path);

// ---- pipeline -----------------------------------------------------------

// Runs clean -> window -> entities -> TF-IDF fit -> cluster -> assign ->
// filter -> features -> predict. Model layout version must match the
// library's (LayoutMismatch otherwise).
CheckOutcome check_claim(const std::string& claim_text, Instant timestamp,
                         const std::vector<CleanPost>& corpus, const RandomForestModel& model,
                         const Resources& resources, const PipelineConfig& config);

// Same stages without the classifier; used by training, evaluation and the
// feature-inspection CLI.
FeatureOutcome claim_features(const std::string& claim_text, Instant timestamp,
                              const std::vector<CleanPost>& corpus, const Resources& resources,
                              const PipelineConfig& config);

// Seeded undersampling of the majority class to the minority count, then a
// seeded shuffle. Claim contents are never altered. Throws SingleClassData.
std::vector<LabeledClaim> balance(const std::vector<LabeledClaim>& dataset, std::uint64_t seed);

// Features for every claim (dropping Unverifiable ones into the report),
// class balancing, then forest training. Throws NoVerifiableClaims or
// SingleClassData.
RandomForestModel train_pipeline(const std::vector<LabeledClaim>& claims,
                                 const std::vector<CleanPost>& corpus, const Resources& resources,
                                 const PipelineConfig& config, const TrainConfig& train_config,
                                 TrainReport* report = nullptr);

// Confusion matrix over verifiable claims; fake is the positive class and
// undefined ratios stay absent. Ids found in training_ids are still scored
// but reported in overlapping_ids. Throws NoVerifiableClaims.
Metrics evaluate(const RandomForestModel& model, const std::vector<LabeledClaim>& claims,
                 const std::vector<CleanPost>& corpus, const Resources& resources,
                 const PipelineConfig& config,
                 const std::set<std::string>& training_ids = {});

// Seeded shuffle split; the first `llround(n * holdout)` claims become the
// held-out set.
std::pair<std::vector<LabeledClaim>, std::vector<LabeledClaim>>
split_claims(const std::vector<LabeledClaim>& claims, double holdout, std::uint64_t seed);

struct ClusterReport {
    std::size_t chosen_k = 0;
    double silhouette = 0.0;
    TimeWindow window;
    std::vector<ClusterSummary> clusters;
};

// Clusters one window of the corpus without a target claim.
// Throws Error(EmptyWindow/EmptyVocabulary/TooFewPoints) when not clusterable.
ClusterReport cluster_report(Instant center, const std::vector<CleanPost>& corpus,
                             const Resources& resources, const PipelineConfig& config);

// ---- JSON rendering (stable key order, deterministic bytes) -------------

nlohmann::json verdict_to_json(const Verdict& verdict, const std::string& claim_text,
                               Instant timestamp);
nlohmann::json unverifiable_to_json(FailStage stage, const std::string& claim_text,
                                    Instant timestamp);
nlohmann::json metrics_to_json(const Metrics& metrics);
nlohmann::json cluster_report_to_json(const ClusterReport& report);
nlohmann::json train_report_to_json(const TrainReport& report);

} // namespace crosscheck

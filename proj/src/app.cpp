#include "crosscheck/app.hpp"

#include "crosscheck/error.hpp"
#include "crosscheck/rng.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

namespace crosscheck {

namespace {

constexpr const char* kCorpusSchema = "crosscheck-corpus/1";

std::string ascii_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
        return c < 0x80u ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    return s;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Everything the shared pipeline stages produce for one claim window.
struct StoryResult {
    std::optional<FailStage> fail;
    CleanedText target;
    MatchedStory story;
    ClusterSummary summary;
};

ClusterSummary summarize_cluster(int index, const TfIdfModel& tfidf,
                                 const std::vector<SparseVector>& member_vecs) {
    std::map<std::uint32_t, double> sums;
    for (const SparseVector& vec : member_vecs) {
        for (const auto& [term, weight] : vec.pairs) sums[term] += weight;
    }
    std::vector<std::pair<std::string, double>> entries;
    entries.reserve(sums.size());
    for (const auto& [term, weight] : sums) entries.emplace_back(tfidf.terms()[term], weight);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > 10) entries.resize(10);

    ClusterSummary summary;
    summary.index = index;
    summary.size = member_vecs.size();
    summary.top_entities = std::move(entries);
    return summary;
}

// clean -> window -> entities -> tf-idf -> cluster -> assign -> filter.
StoryResult run_to_story(const std::string& claim_text, Instant timestamp,
                         const std::vector<CleanPost>& corpus, const Resources& resources,
                         const PipelineConfig& config) {
    StoryResult result;

    try {
        result.target = clean_text(claim_text, resources.stopwords);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::EmptyAfterCleaning) throw;
        // A claim with no surviving tokens has no vocabulary to match on and
        // falls out at the zero-target check below.
    }

    std::vector<CleanPost> window;
    try {
        window = select_window(corpus, TimeWindow{timestamp, config.radius_days});
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::EmptyWindow) throw;
        result.fail = FailStage::EmptyWindow;
        return result;
    }

    std::vector<EntityList> docs;
    docs.reserve(window.size());
    for (const CleanPost& post : window) docs.push_back(resources.extractor.extract(post.text_cased));

    TfIdfModel tfidf;
    try {
        tfidf = TfIdfModel::fit(docs);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::EmptyVocabulary) throw;
        result.fail = FailStage::EmptyVocabulary;
        return result;
    }

    std::vector<SparseVector> vectors;
    vectors.reserve(window.size());
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < window.size(); ++i) {
        vectors.push_back(tfidf.transform(docs[i]));
        if (!vectors.back().is_zero()) nonzero.push_back(i);
    }

    const SparseVector target_vec =
        tfidf.transform(resources.extractor.extract(result.target.text_cased));
    if (target_vec.is_zero()) {
        result.fail = FailStage::ZeroTargetVector;
        return result;
    }

    std::vector<std::size_t> members; // indices into window
    int cluster_index = 0;
    bool clustered = false;
    if (nonzero.size() >= 3) {
        std::vector<SparseVector> points;
        points.reserve(nonzero.size());
        for (std::size_t i : nonzero) points.push_back(vectors[i]);
        try {
            const StoryClustering clustering = select_k(points, config.clustering_seed);
            cluster_index = assign_cluster(clustering.model, target_vec);
            for (std::size_t p = 0; p < nonzero.size(); ++p) {
                if (clustering.labels[p] == cluster_index) members.push_back(nonzero[p]);
            }
            clustered = true;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::TooFewPoints) throw;
            // Degenerate window (e.g. all duplicate vectors): treat it as a
            // single story instead of refusing the claim.
        }
    }
    if (!clustered) members = nonzero;

    std::vector<CleanPost> member_posts;
    std::vector<SparseVector> member_vecs;
    for (std::size_t i : members) {
        member_posts.push_back(window[i]);
        member_vecs.push_back(vectors[i]);
    }

    try {
        result.story = filter_relevant(member_posts, member_vecs, target_vec, cluster_index,
                                       config.m, config.tau);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoRelevantStory) throw;
        result.fail = FailStage::NoRelevantStory;
        return result;
    }
    result.summary = summarize_cluster(cluster_index, tfidf, member_vecs);
    return result;
}

CleanPost claim_as_post(const std::string& claim_text, Instant timestamp,
                        const CleanedText& cleaned) {
    CleanPost post;
    post.id = "claim";
    post.source = "claim";
    post.timestamp = timestamp;
    post.text = claim_text;
    post.text_cased = cleaned.text_cased;
    post.text_norm = cleaned.text_norm;
    post.tokens = cleaned.tokens;
    return post;
}

// Undersamples the majority class to the minority count and shuffles,
// returning the surviving indices in final order.
std::vector<std::size_t> balance_order(const std::vector<Label>& labels, std::uint64_t seed) {
    std::vector<std::size_t> fake, real;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        (labels[i] == Label::Fake ? fake : real).push_back(i);
    }
    if (fake.empty() || real.empty()) {
        throw Error(ErrorKind::SingleClassData, "both classes are required");
    }
    Rng rng = make_rng(seed);
    std::vector<std::size_t>& majority = fake.size() >= real.size() ? fake : real;
    const std::size_t minority_count = std::min(fake.size(), real.size());
    if (majority.size() > minority_count) {
        shuffle(majority, rng);
        majority.resize(minority_count);
    }
    std::vector<std::size_t> order;
    order.reserve(2 * minority_count);
    order.insert(order.end(), fake.begin(), fake.end());
    order.insert(order.end(), real.begin(), real.end());
    shuffle(order, rng);
    return order;
}

Instant parse_claim_date(const std::string& raw) {
    const std::string text = trim(raw);
    try {
        return parse_rfc3339(text);
    } catch (const Error&) {
    }
    try {
        return parse_rfc3339(text + "T00:00:00Z");
    } catch (const Error&) {
    }
    // "December 31, 2017" (the Fake-Real dataset's date style).
    static const std::map<std::string, int> months = {
        {"january", 1}, {"february", 2}, {"march", 3},     {"april", 4},
        {"may", 5},     {"june", 6},     {"july", 7},      {"august", 8},
        {"september", 9}, {"october", 10}, {"november", 11}, {"december", 12}};
    std::istringstream in(text);
    std::string month_name, day_str, year_str;
    if (in >> month_name >> day_str >> year_str) {
        auto it = months.find(ascii_lower(month_name));
        if (it != months.end() && !day_str.empty() && day_str.back() == ',') {
            day_str.pop_back();
            const bool digits =
                !day_str.empty() && !year_str.empty() &&
                std::all_of(day_str.begin(), day_str.end(),
                            [](unsigned char c) { return std::isdigit(c); }) &&
                std::all_of(year_str.begin(), year_str.end(),
                            [](unsigned char c) { return std::isdigit(c); });
            if (digits) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT00:00:00Z",
                              std::stoi(year_str), it->second, std::stoi(day_str));
                return parse_rfc3339(buf);
            }
        }
    }
    throw Error(ErrorKind::ParseError, "unrecognized date '" + raw + "'");
}

// Minimal RFC 4180 reader: quoted fields, "" escapes, embedded newlines.
std::vector<std::vector<std::string>> parse_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;
    char c;
    while (in.get(c)) {
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"': quoted = true; any = true; break;
            case ',': row.push_back(std::move(field)); field.clear(); any = true; break;
            case '\r': break;
            case '\n':
                if (any || !field.empty() || !row.empty()) {
                    row.push_back(std::move(field));
                    field.clear();
                    rows.push_back(std::move(row));
                    row.clear();
                    any = false;
                }
                break;
            default: field.push_back(c); any = true; break;
        }
    }
    if (any || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json post_to_json(const CleanPost& post) {
    nlohmann::json doc;
    doc["id"] = post.id;
    doc["source"] = post.source;
    doc["time"] = format_rfc3339(post.timestamp);
    doc["text"] = post.text;
    return doc;
}

} // namespace

const char* to_string(FailStage stage) {
    switch (stage) {
        case FailStage::EmptyWindow: return "EmptyWindow";
        case FailStage::EmptyVocabulary: return "EmptyVocabulary";
        case FailStage::ZeroTargetVector: return "ZeroTargetVector";
        case FailStage::NoRelevantStory: return "NoRelevantStory";
    }
    return "Unknown";
}

// ---- corpus store -------------------------------------------------------

IngestResult ingest_posts(const std::string& posts_path, const StopwordSet& stopwords) {
    IngestResult result;
    for (const RawPost& raw : load_posts(posts_path)) {
        try {
            result.store.posts.push_back(clean_post(raw, stopwords));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::EmptyAfterCleaning) throw;
            result.skipped_ids.push_back(raw.id);
        }
    }
    result.store.stopwords.assign(stopwords.begin(), stopwords.end());
    return result;
}

void save_corpus(const CorpusStore& store, const std::string& path) {
    nlohmann::json doc;
    doc["schema"] = kCorpusSchema;
    doc["stopwords"] = store.stopwords;
    nlohmann::json posts = nlohmann::json::array();
    for (const CleanPost& post : store.posts) {
        nlohmann::json p = post_to_json(post);
        p["text_cased"] = post.text_cased;
        p["text_norm"] = post.text_norm;
        p["tokens"] = post.tokens;
        posts.push_back(std::move(p));
    }
    doc["posts"] = std::move(posts);

    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
    if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

CorpusStore load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    try {
        if (!doc.contains("schema") || doc["schema"].get<std::string>() != kCorpusSchema) {
            throw Error(ErrorKind::SchemaVersionMismatch,
                        path + ": expected schema '" + std::string(kCorpusSchema) + "'");
        }
        CorpusStore store;
        store.stopwords = doc.at("stopwords").get<std::vector<std::string>>();
        for (const auto& p : doc.at("posts")) {
            CleanPost post;
            post.id = p.at("id").get<std::string>();
            post.source = p.at("source").get<std::string>();
            post.timestamp = parse_rfc3339(p.at("time").get<std::string>());
            post.text = p.at("text").get<std::string>();
            post.text_cased = p.at("text_cased").get<std::string>();
            post.text_norm = p.at("text_norm").get<std::string>();
            post.tokens = p.at("tokens").get<std::vector<std::string>>();
            store.posts.push_back(std::move(post));
        }
        return store;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

// ---- labeled claims -----------------------------------------------------

std::vector<LabeledClaim> load_claims_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::vector<LabeledClaim> claims;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        LabeledClaim claim;
        try {
            claim.id = obj.at("id").get<std::string>();
            claim.text = obj.at("text").get<std::string>();
            claim.timestamp = parse_rfc3339(obj.at("timestamp").get<std::string>());
            claim.label = label_from_string(obj.at("label").get<std::string>());
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (claim.id.empty() || trim(claim.text).empty()) {
            throw Error(ErrorKind::ParseError,
                        path + ":" + std::to_string(lineno) + ": empty id or text");
        }
        if (!seen.insert(claim.id).second) {
            throw Error(ErrorKind::DuplicateId, path + ":" + std::to_string(lineno) +
                                                    ": duplicate id '" + claim.id + "'");
        }
        claims.push_back(std::move(claim));
    }
    return claims;
}

std::vector<LabeledClaim> load_claims_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    const auto rows = parse_csv(in);
    if (rows.empty()) throw Error(ErrorKind::ParseError, path + ": empty CSV");

    int title_col = -1, text_col = -1, date_col = -1, label_col = -1;
    for (std::size_t i = 0; i < rows[0].size(); ++i) {
        const std::string name = ascii_lower(trim(rows[0][i]));
        if (name == "title") title_col = static_cast<int>(i);
        else if (name == "text") text_col = static_cast<int>(i);
        else if (name == "date") date_col = static_cast<int>(i);
        else if (name == "label") label_col = static_cast<int>(i);
    }
    if (title_col < 0 || text_col < 0 || date_col < 0 || label_col < 0) {
        throw Error(ErrorKind::ParseError,
                    path + ": header must name title, text, date and label columns");
    }

    std::vector<LabeledClaim> claims;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::size_t needed = static_cast<std::size_t>(
            std::max(std::max(title_col, text_col), std::max(date_col, label_col)));
        if (row.size() <= needed) {
            throw Error(ErrorKind::ParseError,
                        path + ": row " + std::to_string(r + 1) + " has too few fields");
        }
        LabeledClaim claim;
        claim.id = "csv:" + std::to_string(r + 1);
        claim.text = trim(row[title_col]); // titles act as the claim text
        try {
            claim.timestamp = parse_claim_date(row[date_col]);
            claim.label = label_from_string(ascii_lower(trim(row[label_col])));
        } catch (const Error& e) {
            throw Error(ErrorKind::ParseError, path + ": row " + std::to_string(r + 1) + ": " + e.what());
        }
        if (claim.text.empty()) {
            throw Error(ErrorKind::ParseError,
                        path + ": row " + std::to_string(r + 1) + ": empty title");
        }
        claims.push_back(std::move(claim));
    }
    return claims;
}

std::vector<LabeledClaim> load_claims(const std::string& path) {
    if (path.size() >= 4 && ascii_lower(path.substr(path.size() - 4)) == ".csv") {
        return load_claims_csv(path);
    }
    return load_claims_jsonl(path);
}

// ---- pipeline -----------------------------------------------------------

CheckOutcome check_claim(const std::string& claim_text, Instant timestamp,
                         const std::vector<CleanPost>& corpus, const RandomForestModel& model,
                         const Resources& resources, const PipelineConfig& config) {
    if (model.layout_version != kFeatureLayoutVersion) {
        throw Error(ErrorKind::LayoutMismatch, "model trained with feature layout '" +
                                                   model.layout_version + "', this build uses '" +
                                                   kFeatureLayoutVersion + "'");
    }
    StoryResult staged = run_to_story(claim_text, timestamp, corpus, resources, config);
    CheckOutcome outcome;
    if (staged.fail) {
        outcome.unverifiable = staged.fail;
        return outcome;
    }
    const CleanPost target = claim_as_post(claim_text, timestamp, staged.target);
    const FeatureVector features =
        extract_features(target, staged.story, resources.vectors, resources.sentiment_lexicon,
                         resources.emotion_lexicon);
    const Prediction prediction =
        predict(model, std::vector<double>(features.begin(), features.end()));

    Verdict verdict;
    verdict.label = prediction.label;
    verdict.score = prediction.score;
    verdict.matched_cluster = std::move(staged.summary);
    verdict.evidence = std::move(staged.story.posts);
    verdict.features = features;
    outcome.verdict = std::move(verdict);
    return outcome;
}

FeatureOutcome claim_features(const std::string& claim_text, Instant timestamp,
                              const std::vector<CleanPost>& corpus, const Resources& resources,
                              const PipelineConfig& config) {
    StoryResult staged = run_to_story(claim_text, timestamp, corpus, resources, config);
    FeatureOutcome outcome;
    if (staged.fail) {
        outcome.unverifiable = staged.fail;
        return outcome;
    }
    const CleanPost target = claim_as_post(claim_text, timestamp, staged.target);
    outcome.features = extract_features(target, staged.story, resources.vectors,
                                        resources.sentiment_lexicon, resources.emotion_lexicon);
    return outcome;
}

std::vector<LabeledClaim> balance(const std::vector<LabeledClaim>& dataset, std::uint64_t seed) {
    std::vector<Label> labels;
    labels.reserve(dataset.size());
    for (const LabeledClaim& claim : dataset) labels.push_back(claim.label);
    std::vector<LabeledClaim> out;
    for (std::size_t i : balance_order(labels, seed)) out.push_back(dataset[i]);
    return out;
}

RandomForestModel train_pipeline(const std::vector<LabeledClaim>& claims,
                                 const std::vector<CleanPost>& corpus, const Resources& resources,
                                 const PipelineConfig& config, const TrainConfig& train_config,
                                 TrainReport* report) {
    TrainReport local;
    local.input_count = claims.size();

    std::vector<const LabeledClaim*> verifiable;
    std::vector<FeatureVector> features;
    for (const LabeledClaim& claim : claims) {
        const FeatureOutcome outcome =
            claim_features(claim.text, claim.timestamp, corpus, resources, config);
        if (!outcome.ok()) {
            local.dropped.emplace_back(claim.id, *outcome.unverifiable);
            continue;
        }
        verifiable.push_back(&claim);
        features.push_back(*outcome.features);
        if (claim.label == Label::Fake) ++local.verifiable_fake;
        else ++local.verifiable_real;
    }
    if (verifiable.empty()) {
        throw Error(ErrorKind::NoVerifiableClaims, "no claim could be checked against the corpus");
    }

    std::vector<Label> labels;
    labels.reserve(verifiable.size());
    for (const LabeledClaim* claim : verifiable) labels.push_back(claim->label);
    const std::vector<std::size_t> order = balance_order(labels, train_config.seed);

    std::vector<std::vector<double>> X;
    std::vector<Label> y;
    X.reserve(order.size());
    for (std::size_t i : order) {
        X.emplace_back(features[i].begin(), features[i].end());
        y.push_back(verifiable[i]->label);
        local.training_ids.push_back(verifiable[i]->id);
    }
    local.balanced_per_class = order.size() / 2;

    RandomForestModel model = forest_fit(X, y, train_config, kFeatureLayoutVersion);
    if (report) *report = std::move(local);
    return model;
}

Metrics evaluate(const RandomForestModel& model, const std::vector<LabeledClaim>& claims,
                 const std::vector<CleanPost>& corpus, const Resources& resources,
                 const PipelineConfig& config, const std::set<std::string>& training_ids) {
    if (model.layout_version != kFeatureLayoutVersion) {
        throw Error(ErrorKind::LayoutMismatch, "model feature layout '" + model.layout_version +
                                                   "' does not match '" + kFeatureLayoutVersion +
                                                   "'");
    }
    Metrics metrics;
    for (const LabeledClaim& claim : claims) {
        if (training_ids.count(claim.id)) metrics.overlapping_ids.push_back(claim.id);
        const FeatureOutcome outcome =
            claim_features(claim.text, claim.timestamp, corpus, resources, config);
        if (!outcome.ok()) {
            metrics.unverifiable.emplace_back(claim.id, *outcome.unverifiable);
            continue;
        }
        const Prediction prediction =
            predict(model, std::vector<double>(outcome.features->begin(), outcome.features->end()));
        const bool actual_fake = claim.label == Label::Fake;
        const bool predicted_fake = prediction.label == Label::Fake;
        if (actual_fake && predicted_fake) ++metrics.tp;
        else if (!actual_fake && predicted_fake) ++metrics.fp;
        else if (actual_fake && !predicted_fake) ++metrics.fn;
        else ++metrics.tn;
    }
    const std::int64_t total = metrics.verifiable();
    if (total == 0) {
        throw Error(ErrorKind::NoVerifiableClaims, "no claim could be checked against the corpus");
    }
    metrics.accuracy = static_cast<double>(metrics.tp + metrics.tn) / static_cast<double>(total);
    if (metrics.tp + metrics.fp > 0) {
        metrics.precision =
            static_cast<double>(metrics.tp) / static_cast<double>(metrics.tp + metrics.fp);
    }
    if (metrics.tp + metrics.fn > 0) {
        metrics.recall =
            static_cast<double>(metrics.tp) / static_cast<double>(metrics.tp + metrics.fn);
    }
    return metrics;
}

std::pair<std::vector<LabeledClaim>, std::vector<LabeledClaim>>
split_claims(const std::vector<LabeledClaim>& claims, double holdout, std::uint64_t seed) {
    std::vector<std::size_t> order(claims.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng = make_rng(seed);
    shuffle(order, rng);
    const std::size_t n_test = static_cast<std::size_t>(
        std::llround(holdout * static_cast<double>(claims.size())));
    std::pair<std::vector<LabeledClaim>, std::vector<LabeledClaim>> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        (i < n_test ? out.second : out.first).push_back(claims[order[i]]);
    }
    return out;
}

ClusterReport cluster_report(Instant center, const std::vector<CleanPost>& corpus,
                             const Resources& resources, const PipelineConfig& config) {
    const std::vector<CleanPost> window =
        select_window(corpus, TimeWindow{center, config.radius_days});

    std::vector<EntityList> docs;
    docs.reserve(window.size());
    for (const CleanPost& post : window) docs.push_back(resources.extractor.extract(post.text_cased));
    const TfIdfModel tfidf = TfIdfModel::fit(docs);

    std::vector<SparseVector> points;
    for (std::size_t i = 0; i < window.size(); ++i) {
        SparseVector vec = tfidf.transform(docs[i]);
        if (!vec.is_zero()) points.push_back(std::move(vec));
    }
    const StoryClustering clustering = select_k(points, config.clustering_seed);

    ClusterReport report;
    report.chosen_k = clustering.model.k;
    report.silhouette = clustering.silhouette;
    report.window = TimeWindow{center, config.radius_days};
    for (std::size_t c = 0; c < clustering.model.k; ++c) {
        std::vector<SparseVector> member_vecs;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (clustering.labels[i] == static_cast<int>(c)) member_vecs.push_back(points[i]);
        }
        report.clusters.push_back(summarize_cluster(static_cast<int>(c), tfidf, member_vecs));
    }
    return report;
}

// ---- JSON rendering -----------------------------------------------------

namespace {

nlohmann::json summary_to_json(const ClusterSummary& summary) {
    nlohmann::json doc;
    doc["index"] = summary.index;
    doc["size"] = summary.size;
    nlohmann::json tops = nlohmann::json::array();
    for (const auto& [entity, weight] : summary.top_entities) {
        tops.push_back(nlohmann::json::array({entity, weight}));
    }
    doc["top_entities"] = std::move(tops);
    return doc;
}

} // namespace

nlohmann::json verdict_to_json(const Verdict& verdict, const std::string& claim_text,
                               Instant timestamp) {
    nlohmann::json doc;
    doc["status"] = "ok";
    doc["claim"] = {{"text", claim_text}, {"time", format_rfc3339(timestamp)}};
    doc["label"] = to_string(verdict.label);
    doc["score"] = verdict.score;
    doc["matched_cluster"] = summary_to_json(verdict.matched_cluster);
    nlohmann::json evidence = nlohmann::json::array();
    for (const auto& [post, cos] : verdict.evidence) {
        nlohmann::json p = post_to_json(post);
        p["cosine"] = cos;
        evidence.push_back(std::move(p));
    }
    doc["evidence"] = std::move(evidence);
    doc["features"] = verdict.features;
    return doc;
}

nlohmann::json unverifiable_to_json(FailStage stage, const std::string& claim_text,
                                    Instant timestamp) {
    nlohmann::json doc;
    doc["status"] = "unverifiable";
    doc["reason"] = to_string(stage);
    doc["claim"] = {{"text", claim_text}, {"time", format_rfc3339(timestamp)}};
    return doc;
}

nlohmann::json metrics_to_json(const Metrics& metrics) {
    nlohmann::json doc;
    doc["confusion"] = {{"tp", metrics.tp}, {"fp", metrics.fp}, {"fn", metrics.fn}, {"tn", metrics.tn}};
    doc["verifiable"] = metrics.verifiable();
    if (metrics.accuracy) doc["accuracy"] = *metrics.accuracy;
    if (metrics.precision) doc["precision"] = *metrics.precision;
    if (metrics.recall) doc["recall"] = *metrics.recall;
    nlohmann::json unverifiable = nlohmann::json::array();
    for (const auto& [id, stage] : metrics.unverifiable) {
        unverifiable.push_back({{"id", id}, {"reason", to_string(stage)}});
    }
    doc["unverifiable"] = std::move(unverifiable);
    if (!metrics.overlapping_ids.empty()) doc["overlapping_ids"] = metrics.overlapping_ids;
    return doc;
}

nlohmann::json cluster_report_to_json(const ClusterReport& report) {
    nlohmann::json doc;
    doc["chosen_k"] = report.chosen_k;
    doc["silhouette"] = report.silhouette;
    doc["window"] = {{"begin", format_rfc3339(report.window.begin())},
                     {"center", format_rfc3339(report.window.center)},
                     {"end", format_rfc3339(report.window.end())}};
    nlohmann::json clusters = nlohmann::json::array();
    for (const ClusterSummary& summary : report.clusters) clusters.push_back(summary_to_json(summary));
    doc["clusters"] = std::move(clusters);
    return doc;
}

nlohmann::json train_report_to_json(const TrainReport& report) {
    nlohmann::json doc;
    doc["input_count"] = report.input_count;
    doc["verifiable"] = {{"fake", report.verifiable_fake}, {"real", report.verifiable_real}};
    doc["balanced_per_class"] = report.balanced_per_class;
    nlohmann::json dropped = nlohmann::json::array();
    for (const auto& [id, stage] : report.dropped) {
        dropped.push_back({{"id", id}, {"reason", to_string(stage)}});
    }
    doc["dropped"] = std::move(dropped);
    doc["training_ids"] = report.training_ids;
    return doc;
}

} // namespace crosscheck
